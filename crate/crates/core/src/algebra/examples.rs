//! Small hand-written algebras used across tests.

use super::anti::AntiAlg;
use super::module::ModuleAction;
use crate::linalg::Mat;
use crate::rat::Rat;

/// sl₂ on the basis (e, h, f): [e,h] = −2e, [e,f] = h, [h,f] = −2f.
pub fn sl2() -> AntiAlg {
    let mut a = AntiAlg::zero(3, vec!["e".into(), "h".into(), "f".into()]);
    a.set(0, 1, vec![(0, Rat::int(-2))]);
    a.set(0, 2, vec![(1, Rat::one())]);
    a.set(1, 2, vec![(2, Rat::int(-2))]);
    a
}

/// The 2-dimensional nonabelian algebra [x, y] = y.
pub fn solvable2() -> AntiAlg {
    let mut a = AntiAlg::zero(2, vec!["x".into(), "y".into()]);
    a.set(0, 1, vec![(1, Rat::one())]);
    a
}

/// sl₂ acting on k².
pub fn natural_sl2() -> ModuleAction {
    let e = Mat::from_ints(&[&[0, 1], &[0, 0]]);
    let h = Mat::from_ints(&[&[1, 0], &[0, -1]]);
    let f = Mat::from_ints(&[&[0, 0], &[1, 0]]);
    ModuleAction::from_mats(sl2(), &[e, h, f])
}
