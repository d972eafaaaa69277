//! The point ring `P* = H*(pt)`, the rings `P*(P)` of EP and `P*(A,P)` of
//! E(A,P), and the maps of the long exact sequence between them.

pub mod degree;
pub mod eap;
pub mod ep;
pub mod les;
pub mod maps;
pub mod ring;

pub use degree::RoDegree;
pub use eap::{eap_action, eap_group_at, EapElement, EapGen};
pub use ep::{ep_group_at, ep_mul, EpElement};
pub use les::{les_point_check, LesFailure};
pub use maps::{map_delta, map_phi, map_psi};
pub use ring::{point_basis, point_group_at, point_mul, LevelE, PointElement, PointGen};
