//! `Tor^A_*(t, N)` as homology of the normalized bar complex.

use crate::error::{Error, Result};
use crate::linalg::{ChainComplex, Engine, HomologyGroup};
use crate::module::BasedModule;
use crate::ring::{Integer, Ring};

use super::bar::BarComplex;

/// The bar complex for `Tor_k`, `k ≤ max_degree` (built one degree higher).
pub fn tor_complex(module: &BasedModule, max_degree: usize) -> Result<ChainComplex> {
    Engine::for_ring(module.ring())?;
    BarComplex::new(module, max_degree + 1)?.complex()
}

/// `Tor_k(t, N)` for `k = 0..=max_degree`.
pub fn tor(module: &BasedModule, max_degree: usize) -> Result<Vec<HomologyGroup>> {
    let c = tor_complex(module, max_degree)?;
    (0..=max_degree as i64).map(|k| c.homology_at(k)).collect()
}

/// `Tor` together with the independent degree-zero value `t ⊗_A N`.
#[derive(Clone, Debug)]
pub struct TorReport {
    pub groups: Vec<HomologyGroup>,
    pub coinvariants: HomologyGroup,
}

impl TorReport {
    /// Degree zero agrees with the coinvariants.
    pub fn degree_zero_consistent(&self) -> bool {
        self.groups.first() == Some(&self.coinvariants)
    }
}

/// `t ⊗_A N` computed directly from the coinvariant relations.
pub fn coinvariants(module: &BasedModule) -> Result<HomologyGroup> {
    let c = module.coinvariants()?;
    Ok(HomologyGroup {
        ring: module.ring(),
        free_rank: c.free_rank(),
        torsion: c.torsion(),
    })
}

pub fn tor_checked(module: &BasedModule, max_degree: usize) -> Result<TorReport> {
    let groups = tor(module, max_degree)?;
    let coinvariants = coinvariants(module)?;
    let report = TorReport { groups, coinvariants };
    if !report.degree_zero_consistent() {
        return Err(Error::Precondition(format!(
            "Tor_0 = {} but t ⊗ N = {}",
            report.groups[0], report.coinvariants
        )));
    }
    Ok(report)
}

/// Universal coefficients: `dim H_k(C ⊗ F_p) = b_k + #{p | τ_k} + #{p | τ_{k−1}}`
/// for a free complex `C` over `Z`. Returns the predicted dimensions.
pub fn uct_prediction(integral: &[HomologyGroup], p: u64) -> Result<Vec<usize>> {
    if integral.iter().any(|g| g.ring != Ring::Integers) {
        return Err(Error::UnsupportedRing { needed: "Z", ring: integral[0].ring.to_string() });
    }
    let pz = Integer::from(p as i64);
    let count = |g: &HomologyGroup| g.torsion.iter().filter(|t| pz.divides(t)).count();
    Ok((0..integral.len())
        .map(|k| {
            integral[k].free_rank + count(&integral[k]) + if k > 0 { count(&integral[k - 1]) } else { 0 }
        })
        .collect())
}

/// Checks mod-`p` dimensions against the integral groups.
pub fn uct_consistent(integral: &[HomologyGroup], mod_p: &[HomologyGroup], p: u64) -> Result<bool> {
    let predicted = uct_prediction(integral, p)?;
    Ok(predicted.len() == mod_p.len() && predicted.iter().zip(mod_p).all(|(d, g)| *d == g.free_rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BasedAlgebra, Family};

    #[test]
    fn symmetric_group_two() {
        let a = BasedAlgebra::with_ints(Family::SymGroupAlgebra, 2, Ring::Integers, 0, 1).unwrap();
        let r = tor_checked(&BasedModule::trivial(&a), 3).unwrap();
        let expected = [
            HomologyGroup::free(Ring::Integers, 1),
            HomologyGroup::with_torsion(Ring::Integers, 0, &[2]),
            HomologyGroup::zero(Ring::Integers),
            HomologyGroup::with_torsion(Ring::Integers, 0, &[2]),
        ];
        assert_eq!(r.groups, expected);
    }

    #[test]
    fn uct_on_rp_infinity() {
        let z = [
            HomologyGroup::free(Ring::Integers, 1),
            HomologyGroup::with_torsion(Ring::Integers, 0, &[2]),
            HomologyGroup::zero(Ring::Integers),
        ];
        assert_eq!(uct_prediction(&z, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(uct_prediction(&z, 3).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn free_coefficients_have_no_higher_tor() {
        for fam in [Family::RookBrauer, Family::Motzkin] {
            let a = BasedAlgebra::with_ints(fam, 2, Ring::Integers, 2, -1).unwrap();
            let r = tor_checked(&BasedModule::regular(&a), 3).unwrap();
            assert_eq!(r.groups[0], HomologyGroup::free(Ring::Integers, 1));
            assert!(r.groups[1..].iter().all(HomologyGroup::is_zero));
        }
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let ring = Ring::integers_mod(6).unwrap();
        let a = BasedAlgebra::with_ints(Family::RookBrauer, 1, ring, 0, 1).unwrap();
        assert!(matches!(tor(&BasedModule::trivial(&a), 1), Err(Error::UnsupportedRing { .. })));
    }
}
