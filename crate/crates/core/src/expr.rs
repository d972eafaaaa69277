//! The element grammar shared by every ring, and canonical printing.
//!
//! Expressions are sums of products of atoms, integers and parenthesized
//! subexpressions, with integer exponents:
//! `2*eps^3*xi^-2`, `kappa`, `inv_eps_kappa(4)`, `tau(5)`, `inv_eps_tau(2,3)`,
//! `tau3`, `zbar*c^2*cbar`, `zeta-^-1*(eps^2 + xi*c-)`. The Unicode forms the
//! printers emit (`ε²ζ̄c + ξcc̄`, `ε⁻³τ₃`, `ζ₋c₋`) parse to the same values.

use std::fmt;

use crate::error::{Error, Result};
use crate::point::{
    eap_action, ep_mul, map_phi, point_mul, EapElement, EapGen, EpElement, PointElement, PointGen,
};
use crate::projective::basis::superscript;
use crate::projective::{CpElement, CpMonomial, FixedPoly, Side, ZElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(i64),
    Atom { name: String, args: Vec<i64> },
    Sum(Vec<Expr>),
    Neg(Box<Expr>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
    Comma,
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

const MACRON: char = '\u{304}';
const TILDE: char = '\u{303}';

fn superscript_value(ch: char) -> Option<char> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹"
        .chars()
        .position(|c| c == ch)
        .map(|d| char::from(b'0' + d as u8))
        .or((ch == '⁻').then_some('-'))
}

fn subscript_value(ch: char) -> Option<char> {
    "₀₁₂₃₄₅₆₇₈₉"
        .chars()
        .position(|c| c == ch)
        .map(|d| char::from(b'0' + d as u8))
}

/// Reads a run of superscript characters starting at `i` as a signed integer.
fn read_superscript(chars: &[char], i: &mut usize) -> Result<Option<i64>> {
    let mut s = String::new();
    while let Some(v) = chars.get(*i).copied().and_then(superscript_value) {
        s.push(v);
        *i += 1;
    }
    if s.is_empty() {
        return Ok(None);
    }
    s.parse()
        .map(Some)
        .map_err(|_| perr(format!("bad superscript exponent {s}")))
}

fn call(out: &mut Vec<Token>, name: &str, args: &[i64]) {
    out.push(Token::Ident(name.into()));
    out.push(Token::Open);
    for (n, a) in args.iter().enumerate() {
        if n > 0 {
            out.push(Token::Comma);
        }
        if *a < 0 {
            out.push(Token::Minus);
        }
        out.push(Token::Num(a.abs()));
    }
    out.push(Token::Close);
}

/// `τ(ι⁻ⁿ)` starting at `i`, giving `n`.
fn read_tau_iota(chars: &[char], i: &mut usize) -> Result<Option<i64>> {
    if chars.get(*i) != Some(&'τ')
        || chars.get(*i + 1) != Some(&'(')
        || chars.get(*i + 2) != Some(&'ι')
    {
        return Ok(None);
    }
    let mut j = *i + 3;
    let e = read_superscript(chars, &mut j)?.ok_or_else(|| perr("expected an exponent on ι"))?;
    if chars.get(j) != Some(&')') || e >= 0 {
        return Err(perr("expected τ(ι⁻ⁿ)"));
    }
    *i = j + 1;
    Ok(Some(-e))
}

/// Unicode names: `c̄`, `ζ̄`, `c̃`, `ζ̃`, `c₊`, `ζ₋`, `τ₃`, and the point-ring
/// classes `ε⁻ᵐκ`, `ε⁻ᵐτ(ι⁻ᵗ)`, `τ(ι⁻ⁿ)`.
fn unicode_token(chars: &[char], i: &mut usize, out: &mut Vec<Token>) -> Result<bool> {
    let ch = chars[*i];
    let next = chars.get(*i + 1).copied();
    match ch {
        'ε' => {
            let mut j = *i + 1;
            if chars.get(j) == Some(&'⁻') {
                let m = -read_superscript(chars, &mut j)?.unwrap_or(0);
                if chars.get(j) == Some(&'κ') {
                    call(out, "inv_eps_kappa", &[m]);
                    *i = j + 1;
                    return Ok(true);
                }
                let mut k = j;
                if let Some(t) = read_tau_iota(chars, &mut k)? {
                    if t % 2 == 0 {
                        return Err(perr("ε⁻ᵐτ(ι⁻ᵗ) needs odd t"));
                    }
                    call(out, "inv_eps_tau", &[m, (t - 1) / 2]);
                    *i = k;
                    return Ok(true);
                }
            }
            out.push(Token::Ident("eps".into()));
            *i += 1;
        }
        'τ' => {
            if let Some(n) = read_tau_iota(chars, i)? {
                call(out, "tau", &[n]);
                return Ok(true);
            }
            let mut j = *i + 1;
            let mut digits = String::new();
            while let Some(d) = chars.get(j).copied().and_then(subscript_value) {
                digits.push(d);
                j += 1;
            }
            if digits.is_empty() {
                return Err(perr("expected τ(ι⁻ⁿ) or τ with a subscript"));
            }
            out.push(Token::Ident(format!("tau{digits}")));
            *i = j;
        }
        'ζ' | 'c' => {
            let base = if ch == 'ζ' { "zeta" } else { "c" };
            let (name, used) = match next {
                Some(MACRON) => (
                    if ch == 'ζ' {
                        "zbar".to_string()
                    } else {
                        "cbar".to_string()
                    },
                    2,
                ),
                Some(TILDE) => (
                    if ch == 'ζ' {
                        "ztil".to_string()
                    } else {
                        "ctil".to_string()
                    },
                    2,
                ),
                Some('₊') => (format!("{base}+"), 2),
                Some('₋') => (format!("{base}-"), 2),
                _ => (base.to_string(), 1),
            };
            out.push(Token::Ident(name));
            *i += used;
        }
        'ξ' | 'κ' => {
            out.push(Token::Ident(if ch == 'ξ' { "xi" } else { "kappa" }.into()));
            *i += 1;
        }
        _ => {
            let mut j = *i;
            match read_superscript(chars, &mut j)? {
                Some(e) => {
                    out.push(Token::Caret);
                    if e < 0 {
                        out.push(Token::Minus);
                    }
                    out.push(Token::Num(e.abs()));
                    *i = j;
                }
                None => return Ok(false),
            }
        }
    }
    Ok(true)
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            ',' => {
                out.push(Token::Comma);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(
                    s.parse()
                        .map_err(|_| perr(format!("number out of range: {s}")))?,
                ));
            }
            'c' if matches!(
                chars.get(i + 1),
                Some(&MACRON) | Some(&TILDE) | Some('₊') | Some('₋')
            ) =>
            {
                unicode_token(&chars, &mut i, &mut out)?;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let mut name: String = chars[start..i].iter().collect();
                // juxtaposed single letters such as `cc̄` or `gc`
                if name.len() > 1 && name.chars().all(|c| c == 'c' || c == 'g') {
                    i = start + 1;
                    name.truncate(1);
                    if chars
                        .get(i)
                        .is_some_and(|&n| n == MACRON || n == TILDE || n == '₊' || n == '₋')
                    {
                        i = start;
                        unicode_token(&chars, &mut i, &mut out)?;
                        continue;
                    }
                }
                // `c+`, `zeta-`: a sign glued to the name and not followed by an operand
                if (name == "c" || name == "zeta")
                    && i < chars.len()
                    && matches!(chars[i], '+' | '-')
                {
                    let next = chars.get(i + 1).copied();
                    let operand = next.is_some_and(|n| n.is_alphanumeric() || n == '_' || n == '(');
                    if !operand {
                        name.push(chars[i]);
                        i += 1;
                    }
                }
                out.push(Token::Ident(name));
            }
            _ => {
                if !unicode_token(&chars, &mut i, &mut out)? {
                    return Err(perr(format!("unexpected character {ch:?}")));
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(ref u) if *u == t => Ok(()),
            other => Err(perr(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let first_neg = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let t = self.product()?;
        terms.push(if first_neg { Expr::Neg(Box::new(t)) } else { t });
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    terms.push(self.product()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    terms.push(Expr::Neg(Box::new(self.product()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn product(&mut self) -> Result<Expr> {
        let mut factors = vec![self.power()?];
        loop {
            match self.peek() {
                Some(Token::Star) => self.pos += 1,
                // juxtaposition, as in `2g` or `ε²ζ̄c`
                Some(Token::Ident(_)) | Some(Token::Open) => {}
                _ => break,
            }
            factors.push(self.power()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Token::Num(n)) => Ok(if neg { -n } else { n }),
            other => Err(perr(format!("expected an integer, found {other:?}"))),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = if self.peek() == Some(&Token::Open) {
            self.pos += 1;
            let e = self.signed_int()?;
            self.expect(Token::Close)?;
            e
        } else {
            self.signed_int()?
        };
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Expr::Num(n)),
            Some(Token::Open) => {
                let e = self.sum()?;
                self.expect(Token::Close)?;
                Ok(e)
            }
            Some(Token::Minus) => Ok(Expr::Neg(Box::new(self.power()?))),
            Some(Token::Ident(name)) => {
                let mut args = Vec::new();
                if self.peek() == Some(&Token::Open) && takes_arguments(&name) {
                    self.pos += 1;
                    args.push(self.signed_int()?);
                    while self.peek() == Some(&Token::Comma) {
                        self.pos += 1;
                        args.push(self.signed_int()?);
                    }
                    self.expect(Token::Close)?;
                }
                Ok(Expr::Atom { name, args })
            }
            other => Err(perr(format!("unexpected token {other:?}"))),
        }
    }
}

fn takes_arguments(name: &str) -> bool {
    matches!(name, "tau" | "inv_eps_kappa" | "inv_eps_tau")
}

pub fn parse(src: &str) -> Result<Expr> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(perr("empty expression"));
    }
    let mut p = Parser { tokens, pos: 0 };
    let e = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(perr(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// A ring (or module) the grammar can be evaluated in.
pub trait Space {
    type Value: Clone;
    fn number(&self, n: i64) -> Result<Self::Value>;
    fn atom(&self, name: &str, args: &[i64]) -> Result<Self::Value>;
    fn add(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value>;
    fn neg(&self, x: &Self::Value) -> Result<Self::Value>;
    fn mul(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value>;
    fn pow(&self, x: &Self::Value, e: i64) -> Result<Self::Value> {
        if e < 0 {
            return Err(Error::Unsupported("negative exponent in this ring".into()));
        }
        let mut acc = self.number(1)?;
        for _ in 0..e {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }
}

pub fn evaluate<S: Space>(space: &S, e: &Expr) -> Result<S::Value> {
    match e {
        Expr::Num(n) => space.number(*n),
        Expr::Atom { name, args } => space.atom(name, args),
        Expr::Sum(ts) => {
            let mut acc = evaluate(space, &ts[0])?;
            for t in &ts[1..] {
                acc = space.add(&acc, &evaluate(space, t)?)?;
            }
            Ok(acc)
        }
        Expr::Neg(x) => space.neg(&evaluate(space, x)?),
        Expr::Product(fs) => {
            let mut acc = evaluate(space, &fs[0])?;
            for f in &fs[1..] {
                acc = space.mul(&acc, &evaluate(space, f)?)?;
            }
            Ok(acc)
        }
        Expr::Pow(x, k) => space.pow(&evaluate(space, x)?, *k),
    }
}

pub fn parse_in<S: Space>(space: &S, src: &str) -> Result<S::Value> {
    evaluate(space, &parse(src)?)
}

fn unknown(name: &str, space: &str) -> Error {
    perr(format!("unknown symbol `{name}` in the {space} ring"))
}

fn arg_u32(args: &[i64], i: usize, min: i64, name: &str) -> Result<u32> {
    match args.get(i) {
        Some(&v) if v >= min && v <= u32::MAX as i64 => Ok(v as u32),
        _ => Err(perr(format!("bad arguments to {name}"))),
    }
}

fn no_args(name: &str, args: &[i64]) -> Result<()> {
    if args.is_empty() {
        Ok(())
    } else {
        Err(perr(format!("{name} takes no arguments")))
    }
}

/// Atoms of the point ring.
fn point_atom(name: &str, args: &[i64]) -> Result<Option<PointElement>> {
    let plain = |p: PointElement| -> Result<Option<PointElement>> {
        no_args(name, args)?;
        Ok(Some(p))
    };
    match name {
        "eps" => plain(PointElement::eps(1)),
        "xi" => plain(PointElement::xi(1)),
        "kappa" => plain(PointElement::kappa()),
        "g" => plain(PointElement::g()),
        "tau" if args.len() == 1 => Ok(Some(PointElement::tau_iota(args[0]))),
        "inv_eps_kappa" if args.len() == 1 => Ok(Some(PointElement::inv_eps_kappa(arg_u32(
            args, 0, 0, name,
        )?))),
        "inv_eps_tau" if args.len() == 2 => Ok(Some(PointElement::inv_eps_tau(
            arg_u32(args, 0, 0, name)?,
            arg_u32(args, 1, 1, name)?,
        ))),
        "tau" | "inv_eps_kappa" | "inv_eps_tau" => Err(perr(format!("bad arguments to {name}"))),
        _ => Ok(None),
    }
}

fn checked<T>(f: impl FnOnce() -> T) -> Result<T> {
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)).map_err(|_| Error::Overflow)
}

pub struct PointSpace;

impl Space for PointSpace {
    type Value = PointElement;
    fn number(&self, n: i64) -> Result<PointElement> {
        Ok(PointElement::term(PointGen::One, n))
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<PointElement> {
        point_atom(name, args)?.ok_or_else(|| unknown(name, "point"))
    }
    fn add(&self, x: &PointElement, y: &PointElement) -> Result<PointElement> {
        checked(|| x + y)
    }
    fn neg(&self, x: &PointElement) -> Result<PointElement> {
        Ok(-x)
    }
    fn mul(&self, x: &PointElement, y: &PointElement) -> Result<PointElement> {
        checked(|| point_mul(x, y))
    }
}

pub struct EpSpace;

impl Space for EpSpace {
    type Value = EpElement;
    fn number(&self, n: i64) -> Result<EpElement> {
        Ok(EpElement::one().scale(n))
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<EpElement> {
        let p = point_atom(name, args)?.ok_or_else(|| unknown(name, "EP"))?;
        Ok(map_phi(&p))
    }
    fn add(&self, x: &EpElement, y: &EpElement) -> Result<EpElement> {
        checked(|| x + y)
    }
    fn neg(&self, x: &EpElement) -> Result<EpElement> {
        Ok(-x)
    }
    fn mul(&self, x: &EpElement, y: &EpElement) -> Result<EpElement> {
        checked(|| ep_mul(x, y))
    }
    fn pow(&self, x: &EpElement, e: i64) -> Result<EpElement> {
        let base = if e < 0 {
            x.unit_inverse()
                .ok_or_else(|| Error::Unsupported("only ±ξ^k is invertible in EP".into()))?
        } else {
            x.clone()
        };
        let mut acc = EpElement::one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }
}

/// Values met while evaluating in the E(A,P) module: point-ring scalars
/// (with an ε-power that may be negative) and module elements.
#[derive(Clone, Debug)]
pub enum EapValue {
    Scalar { shift: i64, point: PointElement },
    Element(EapElement),
}

impl EapValue {
    pub fn into_element(self) -> Result<EapElement> {
        match self {
            EapValue::Element(x) => Ok(x),
            EapValue::Scalar { point, .. } if point.is_zero() => Ok(EapElement::zero()),
            EapValue::Scalar { .. } => Err(Error::Unsupported(
                "not an element of the E(A,P) module".into(),
            )),
        }
    }
}

pub struct EapSpace;

impl Space for EapSpace {
    type Value = EapValue;
    fn number(&self, n: i64) -> Result<EapValue> {
        Ok(EapValue::Scalar {
            shift: 0,
            point: PointElement::term(PointGen::One, n),
        })
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<EapValue> {
        if name == "kappa" {
            no_args(name, args)?;
            return Ok(EapValue::Element(EapElement::kappa(0)));
        }
        if name == "eps" {
            no_args(name, args)?;
            return Ok(EapValue::Scalar {
                shift: 1,
                point: PointElement::one(),
            });
        }
        // here `ε⁻ᵐκ` is the module class, not the point-ring scalar of that name
        if name == "inv_eps_kappa" {
            if let [m] = args {
                return Ok(EapValue::Element(EapElement::kappa(-*m)));
            }
        }
        if let Some(k) = name.strip_prefix("tau").and_then(|t| t.parse::<u32>().ok()) {
            no_args(name, args)?;
            if k >= 3 && k % 2 == 1 {
                return Ok(EapValue::Element(EapElement::tau(0, (k - 1) / 2)));
            }
            return Err(perr(format!(
                "{name}: the index must be odd and at least 3"
            )));
        }
        let p = point_atom(name, args)?.ok_or_else(|| unknown(name, "E(A,P)"))?;
        Ok(EapValue::Scalar { shift: 0, point: p })
    }
    fn add(&self, x: &EapValue, y: &EapValue) -> Result<EapValue> {
        match (x, y) {
            (EapValue::Element(a), EapValue::Element(b)) => {
                Ok(EapValue::Element(checked(|| a + b)?))
            }
            (EapValue::Scalar { shift: s, point: p }, EapValue::Scalar { shift: t, point: q })
                if s == t =>
            {
                Ok(EapValue::Scalar {
                    shift: *s,
                    point: checked(|| p + q)?,
                })
            }
            _ => Err(Error::Unsupported(
                "cannot add a scalar to an E(A,P) element".into(),
            )),
        }
    }
    fn neg(&self, x: &EapValue) -> Result<EapValue> {
        Ok(match x {
            EapValue::Element(a) => EapValue::Element(-a),
            EapValue::Scalar { shift, point } => EapValue::Scalar {
                shift: *shift,
                point: -point,
            },
        })
    }
    fn mul(&self, x: &EapValue, y: &EapValue) -> Result<EapValue> {
        use EapValue::*;
        match (x, y) {
            (Scalar { shift: s, point: p }, Scalar { shift: t, point: q }) => Ok(Scalar {
                shift: s + t,
                point: checked(|| point_mul(p, q))?,
            }),
            (Scalar { shift, point }, Element(a)) | (Element(a), Scalar { shift, point }) => {
                Ok(Element(checked(|| {
                    eap_action(point, &a.eps_shift(*shift))
                })?))
            }
            (Element(_), Element(_)) => {
                Err(Error::Unsupported("products of two E(A,P) classes".into()))
            }
        }
    }
    fn pow(&self, x: &EapValue, e: i64) -> Result<EapValue> {
        match x {
            EapValue::Scalar { shift, point } if point.is_one() => Ok(EapValue::Scalar {
                shift: shift * e,
                point: point.clone(),
            }),
            EapValue::Scalar { shift, point } if e >= 0 => {
                let mut acc = PointElement::one();
                for _ in 0..e {
                    acc = checked(|| point_mul(&acc, point))?;
                }
                Ok(EapValue::Scalar {
                    shift: shift * e,
                    point: acc,
                })
            }
            EapValue::Element(_) if e == 1 => Ok(x.clone()),
            _ => Err(Error::Unsupported(
                "unsupported power in the E(A,P) module".into(),
            )),
        }
    }
}

pub struct CpSpace;

impl Space for CpSpace {
    type Value = CpElement;
    fn number(&self, n: i64) -> Result<CpElement> {
        Ok(CpElement::one().scale(n))
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<CpElement> {
        let var = match name {
            "c" => Some(CpElement::c()),
            "cbar" => Some(CpElement::cbar()),
            "zeta" => Some(CpElement::zeta()),
            "zbar" => Some(CpElement::zbar()),
            _ => None,
        };
        if let Some(v) = var {
            no_args(name, args)?;
            return Ok(v);
        }
        let p = point_atom(name, args)?.ok_or_else(|| unknown(name, "CP"))?;
        Ok(CpElement::scalar(p))
    }
    fn add(&self, x: &CpElement, y: &CpElement) -> Result<CpElement> {
        checked(|| x + y)
    }
    fn neg(&self, x: &CpElement) -> Result<CpElement> {
        Ok(-x)
    }
    fn mul(&self, x: &CpElement, y: &CpElement) -> Result<CpElement> {
        checked(|| x * y)
    }
    fn pow(&self, x: &CpElement, e: i64) -> Result<CpElement> {
        if e < 0 {
            return Err(Error::Unsupported(
                "negative powers are not defined in the CP ring".into(),
            ));
        }
        checked(|| x.pow(e as u32))
    }
}

/// The cohomology of one fixed component: Laurent in `ζ±`, polynomial in `c±`.
pub struct FixedSpace(pub Side);

fn monomial_inverse<C: crate::projective::fixed::Coefficient>(
    x: &FixedPoly<C>,
    invert: impl Fn(&C) -> Option<C>,
) -> Option<FixedPoly<C>> {
    let mut it = x.terms();
    match (it.next(), it.next()) {
        (Some(((s, 0), c)), None) => invert(c).map(|ci| FixedPoly::term(-s, 0, ci)),
        _ => None,
    }
}

fn fixed_pow<C: crate::projective::fixed::Coefficient>(
    x: &FixedPoly<C>,
    e: i64,
    one: FixedPoly<C>,
    mul: impl Fn(&FixedPoly<C>, &FixedPoly<C>) -> FixedPoly<C>,
    invert: impl Fn(&C) -> Option<C>,
) -> Result<FixedPoly<C>> {
    let base = if e < 0 {
        monomial_inverse(x, invert)
            .ok_or_else(|| Error::Unsupported("only unit multiples of ζ^s are invertible".into()))?
    } else {
        x.clone()
    };
    let mut acc = one;
    for _ in 0..e.unsigned_abs() {
        acc = checked(|| mul(&acc, &base))?;
    }
    Ok(acc)
}

impl Space for FixedSpace {
    type Value = FixedPoly<PointElement>;
    fn number(&self, n: i64) -> Result<Self::Value> {
        Ok(FixedPoly::term(0, 0, PointElement::term(PointGen::One, n)))
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<Self::Value> {
        let sfx = self.0.suffix();
        if name == format!("c{sfx}") {
            no_args(name, args)?;
            return Ok(FixedPoly::term(0, 1, PointElement::one()));
        }
        if name == format!("zeta{sfx}") {
            no_args(name, args)?;
            return Ok(FixedPoly::term(1, 0, PointElement::one()));
        }
        let space = if self.0 == Side::Plus { "C+" } else { "C-" };
        let p = point_atom(name, args)?.ok_or_else(|| unknown(name, space))?;
        Ok(FixedPoly::term(0, 0, p))
    }
    fn add(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value> {
        checked(|| x + y)
    }
    fn neg(&self, x: &Self::Value) -> Result<Self::Value> {
        Ok(-x)
    }
    fn mul(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value> {
        checked(|| x * y)
    }
    fn pow(&self, x: &Self::Value, e: i64) -> Result<Self::Value> {
        let unit = |p: &PointElement| {
            if p.is_one() {
                Some(p.clone())
            } else if (-p).is_one() {
                Some(-p)
            } else {
                None
            }
        };
        fixed_pow(x, e, FixedPoly::<PointElement>::one(), |a, b| a * b, unit)
    }
}

/// The common target of both projections: EP coefficients, variables `ζ̃`, `c̃`.
pub struct ZSpace;

impl Space for ZSpace {
    type Value = ZElement;
    fn number(&self, n: i64) -> Result<ZElement> {
        Ok(FixedPoly::term(0, 0, EpElement::one().scale(n)))
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<ZElement> {
        match name {
            "ctil" => {
                no_args(name, args)?;
                Ok(FixedPoly::term(0, 1, EpElement::one()))
            }
            "ztil" => {
                no_args(name, args)?;
                Ok(FixedPoly::term(1, 0, EpElement::one()))
            }
            _ => {
                let p = point_atom(name, args)?.ok_or_else(|| unknown(name, "Z"))?;
                Ok(FixedPoly::term(0, 0, map_phi(&p)))
            }
        }
    }
    fn add(&self, x: &ZElement, y: &ZElement) -> Result<ZElement> {
        checked(|| x + y)
    }
    fn neg(&self, x: &ZElement) -> Result<ZElement> {
        Ok(-x)
    }
    fn mul(&self, x: &ZElement, y: &ZElement) -> Result<ZElement> {
        checked(|| x * y)
    }
    fn pow(&self, x: &ZElement, e: i64) -> Result<ZElement> {
        fixed_pow(
            x,
            e,
            FixedPoly::<EpElement>::one(),
            |a, b| a * b,
            EpElement::unit_inverse,
        )
    }
}

// Printing

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    pub unicode: bool,
}

impl Style {
    pub const ASCII: Style = Style { unicode: false };
    pub const UNICODE: Style = Style { unicode: true };

    fn join(self, parts: &[String]) -> String {
        parts.join(if self.unicode { "" } else { "*" })
    }

    fn power(self, name: &str, e: i64) -> String {
        match (e, self.unicode) {
            (1, _) => name.to_string(),
            (_, true) => format!("{name}{}", superscript(e)),
            (_, false) => format!("{name}^{e}"),
        }
    }

    fn symbol(self, ascii: &'static str) -> &'static str {
        if !self.unicode {
            return ascii;
        }
        match ascii {
            "eps" => "ε",
            "xi" => "ξ",
            "kappa" => "κ",
            "zeta" => "ζ",
            "zbar" => "ζ̄",
            "cbar" => "c̄",
            "zeta+" => "ζ₊",
            "zeta-" => "ζ₋",
            "c+" => "c₊",
            "c-" => "c₋",
            "ztil" => "ζ̃",
            "ctil" => "c̃",
            other => other,
        }
    }
}

/// One signed summand: `±abs·factors`, where empty `factors` means 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub negative: bool,
    pub abs: u64,
    pub factors: String,
}

impl Piece {
    fn new(c: i64, factors: String) -> Self {
        Piece {
            negative: c < 0,
            abs: c.unsigned_abs(),
            factors,
        }
    }

    fn body(&self, style: Style) -> String {
        match (self.abs, self.factors.is_empty()) {
            (_, true) => self.abs.to_string(),
            (1, false) => self.factors.clone(),
            (k, false) => style.join(&[k.to_string(), self.factors.clone()]),
        }
    }
}

pub fn join_pieces(pieces: &[Piece], style: Style) -> String {
    if pieces.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, p) in pieces.iter().enumerate() {
        match (i, p.negative) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&p.body(style));
    }
    s
}

/// Coefficients that print as a signed sum of pieces.
pub trait Render {
    fn pieces(&self, style: Style) -> Vec<Piece>;

    fn render(&self, style: Style) -> String {
        join_pieces(&self.pieces(style), style)
    }
}

fn point_gen_factors(g: PointGen, style: Style) -> String {
    match g {
        PointGen::One => String::new(),
        PointGen::G => "g".into(),
        PointGen::EpsXi(m, n) => eps_xi_factors(m as i64, n as i64, style),
        PointGen::InvEpsKappa(m) if style.unicode => format!("ε{}κ", superscript(-(m as i64))),
        PointGen::InvEpsKappa(m) => format!("inv_eps_kappa({m})"),
        PointGen::TauIota(n) if style.unicode => format!("τ(ι{})", superscript(-(n as i64))),
        PointGen::TauIota(n) => format!("tau({n})"),
        PointGen::InvEpsTau(m, k) if style.unicode => {
            format!(
                "ε{}τ(ι{})",
                superscript(-(m as i64)),
                superscript(-(2 * k as i64 + 1))
            )
        }
        PointGen::InvEpsTau(m, k) => format!("inv_eps_tau({m},{k})"),
    }
}

fn eps_xi_factors(m: i64, n: i64, style: Style) -> String {
    let mut v = Vec::new();
    if m != 0 {
        v.push(style.power(style.symbol("eps"), m));
    }
    if n != 0 {
        v.push(style.power(style.symbol("xi"), n));
    }
    style.join(&v)
}

impl Render for PointElement {
    fn pieces(&self, style: Style) -> Vec<Piece> {
        self.terms()
            .map(|(g, c)| Piece::new(c, point_gen_factors(g, style)))
            .collect()
    }
}

impl Render for EpElement {
    fn pieces(&self, style: Style) -> Vec<Piece> {
        self.terms()
            .map(|((m, k), c)| Piece::new(c, eps_xi_factors(m as i64, k, style)))
            .collect()
    }
}

impl Render for EapElement {
    fn pieces(&self, style: Style) -> Vec<Piece> {
        self.terms()
            .map(|(g, c)| {
                let (m, name) = match g {
                    EapGen::Kappa(m) => (m, style.symbol("kappa").to_string()),
                    EapGen::Tau(m, k) if style.unicode => (m, format!("τ{}", subscript(2 * k + 1))),
                    EapGen::Tau(m, k) => (m, format!("tau{}", 2 * k + 1)),
                };
                let mut v = Vec::new();
                if m != 0 {
                    v.push(style.power(style.symbol("eps"), m));
                }
                v.push(name);
                Piece::new(c, style.join(&v))
            })
            .collect()
    }
}

fn subscript(n: u32) -> String {
    n.to_string()
        .chars()
        .map(|ch| char::from_u32(0x2080 + ch.to_digit(10).unwrap()).unwrap())
        .collect()
}

/// `coefficient·monomial`, where `monomial` is a product of variables
/// (empty for 1). Multi-term coefficients are parenthesized, and so are
/// monomials with several factors when the coefficient is not 1.
pub fn scaled_pieces<C: Render>(coef: &C, monomial: &str, style: Style) -> Vec<Piece> {
    let mut pieces = coef.pieces(style);
    if monomial.is_empty() {
        return pieces;
    }
    let wrapped = if !style.unicode && monomial.contains('*') {
        format!("({monomial})")
    } else {
        monomial.to_string()
    };
    if pieces.len() == 1 {
        let p = pieces.pop().unwrap();
        let factors = match (p.abs, p.factors.is_empty()) {
            (1, true) => monomial.to_string(),
            (_, true) => wrapped,
            (_, false) => style.join(&[p.factors, wrapped]),
        };
        return vec![Piece {
            negative: p.negative,
            abs: p.abs,
            factors,
        }];
    }
    // a leading negative is factored out: `x - (1 - g)*m`
    let negative = pieces[0].negative;
    if negative {
        pieces.iter_mut().for_each(|p| p.negative = !p.negative);
    }
    let inner = join_pieces(&pieces, style);
    vec![Piece {
        negative,
        abs: 1,
        factors: style.join(&[format!("({inner})"), wrapped]),
    }]
}

impl Render for CpElement {
    fn pieces(&self, style: Style) -> Vec<Piece> {
        self.terms()
            .flat_map(|(b, p)| {
                let m = if b.monomial() == CpMonomial::ONE {
                    String::new()
                } else if style.unicode {
                    b.unicode()
                } else {
                    b.ascii()
                };
                scaled_pieces(p, &m, style)
            })
            .collect()
    }
}

/// A fixed-set polynomial with its variable names (`zeta+`/`c+`, ...).
pub struct Named<'a, C> {
    pub poly: &'a FixedPoly<C>,
    pub zeta: &'static str,
    pub c: &'static str,
}

impl<'a, C> Named<'a, C> {
    pub fn side(poly: &'a FixedPoly<C>, side: Side) -> Self {
        match side {
            Side::Plus => Named {
                poly,
                zeta: "zeta+",
                c: "c+",
            },
            Side::Minus => Named {
                poly,
                zeta: "zeta-",
                c: "c-",
            },
        }
    }

    pub fn z(poly: &'a FixedPoly<C>) -> Self {
        Named {
            poly,
            zeta: "ztil",
            c: "ctil",
        }
    }
}

impl<C: Render + crate::projective::fixed::Coefficient> Render for Named<'_, C> {
    /// Terms group by ζ-power; a group with several c-powers prints as
    /// `ζ^s·(…)`.
    fn pieces(&self, style: Style) -> Vec<Piece> {
        let mut groups: Vec<(i64, Vec<(u32, &C)>)> = Vec::new();
        for ((s, j), c) in self.poly.terms() {
            match groups.last_mut() {
                Some((t, v)) if *t == s => v.push((j, c)),
                _ => groups.push((s, vec![(j, c)])),
            }
        }
        let zeta = style.symbol(self.zeta);
        let cvar = style.symbol(self.c);
        let c_pow = |j: u32| {
            if j == 0 {
                String::new()
            } else {
                style.power(cvar, j as i64)
            }
        };
        let mut out = Vec::new();
        for (s, terms) in groups {
            let z = if s == 0 {
                String::new()
            } else {
                style.power(zeta, s)
            };
            if s == 0 {
                for (j, c) in terms {
                    out.extend(scaled_pieces(c, &c_pow(j), style));
                }
            } else if terms.len() == 1 {
                let (j, c) = terms[0];
                let m: Vec<String> = [z, c_pow(j)]
                    .into_iter()
                    .filter(|x| !x.is_empty())
                    .collect();
                out.extend(scaled_pieces(c, &style.join(&m), style));
            } else {
                let inner: Vec<Piece> = terms
                    .into_iter()
                    .flat_map(|(j, c)| scaled_pieces(c, &c_pow(j), style))
                    .collect();
                let inner = join_pieces(&inner, style);
                out.push(Piece {
                    negative: false,
                    abs: 1,
                    factors: style.join(&[z, format!("({inner})")]),
                });
            }
        }
        out
    }
}

/// Renders with `{}` as ASCII and `{:#}` as Unicode.
pub struct Display<'a, T: Render>(pub &'a T);

impl<T: Render> fmt::Display for Display<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let style = if f.alternate() {
            Style::UNICODE
        } else {
            Style::ASCII
        };
        f.write_str(&self.0.render(style))
    }
}
