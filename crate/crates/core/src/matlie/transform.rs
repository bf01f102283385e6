//! Cayley transform of triples over the Gaussian rationals.
//!
//! `gamma(f, h, e) = (1/2(f + e - ih), i(e - f), 1/2(f + e + ih))` and its
//! inverse `(1/2(e + f + ih), i(f - e), 1/2(e + f - ih))`.

use super::model::LieModel;
use super::sigma::InvolutionMap;
use super::triple::{vadd, vscale, vsub, Sl2Triple};
use crate::scalar::{Field, GaussQ, Q};

fn half() -> GaussQ {
    GaussQ::real(Q::new(1.into(), 2.into()))
}

pub fn to_gauss(t: &Sl2Triple<Q>) -> Sl2Triple<GaussQ> {
    let c = |v: &[Q]| v.iter().map(|x| GaussQ::real(x.clone())).collect();
    Sl2Triple { f: c(&t.f), h: c(&t.h), e: c(&t.e) }
}

/// Sends a normal triple to a Cayley triple.
pub fn cayley_inverse(t: &Sl2Triple<GaussQ>) -> Sl2Triple<GaussQ> {
    let i = GaussQ::i();
    let ef = vadd(&t.e, &t.f);
    let ih = vscale(&i, &t.h);
    Sl2Triple {
        f: vscale(&half(), &vadd(&ef, &ih)),
        h: vscale(&i, &vsub(&t.f, &t.e)),
        e: vscale(&half(), &vsub(&ef, &ih)),
    }
}

/// Sends a Cayley triple back to a normal triple.
pub fn cayley_transform(t: &Sl2Triple<GaussQ>) -> Sl2Triple<GaussQ> {
    let i = GaussQ::i();
    let fe = vadd(&t.f, &t.e);
    let ih = vscale(&i, &t.h);
    Sl2Triple {
        f: vscale(&half(), &vsub(&fe, &ih)),
        h: vscale(&i, &vsub(&t.e, &t.f)),
        e: vscale(&half(), &vadd(&fe, &ih)),
    }
}

/// `sigma(e) = -f`, `sigma(f) = -e` and `sigma(h) = -h`.
pub fn is_cayley_triple(s: &InvolutionMap, t: &Sl2Triple<GaussQ>) -> bool {
    let neg = |v: &[GaussQ]| v.iter().map(|x| x.neg()).collect::<Vec<_>>();
    s.apply_gauss(&t.e) == neg(&t.f) && s.apply_gauss(&t.f) == neg(&t.e) && s.apply_gauss(&t.h) == neg(&t.h)
}

/// Report for one triple: transformed brackets, round trip and the Cayley
/// conditions.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CayleyCheck {
    pub brackets: bool,
    pub round_trip: bool,
    pub cayley_conditions: bool,
}

impl CayleyCheck {
    pub fn passed(&self) -> bool {
        self.brackets && self.round_trip && self.cayley_conditions
    }
}

pub fn check_cayley(model: &LieModel, s: &InvolutionMap, t: &Sl2Triple<Q>) -> CayleyCheck {
    let g = to_gauss(t);
    let hat = cayley_inverse(&g);
    CayleyCheck {
        brackets: hat.verify(model) && cayley_transform(&hat).verify(model),
        round_trip: cayley_transform(&hat) == g && cayley_inverse(&cayley_transform(&hat)) == hat,
        cayley_conditions: is_cayley_triple(s, &hat),
    }
}
