use num_traits::Zero;

use super::action::FiberAction;
use super::triangular::TriangularCertificate;
use super::MostowError;
use crate::exactla::{Rational, SubspaceBasis};

/// A class claimed to have diagonal entry 1, written as a cocycle in the CE
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarClaim {
    pub label: String,
    pub cocycle: String,
}

impl StarClaim {
    pub fn new(label: &str, cocycle: &str) -> Self {
        StarClaim { label: label.into(), cocycle: cocycle.into() }
    }
}

/// The seven classes of `H*(n₃ ⊗ n₃)` asserted to be the only basis vectors
/// fixed modulo later terms.
pub fn benson_gordon_star_claims() -> Vec<StarClaim> {
    vec![
        StarClaim::new("[x1z1]", "x1*z1"),
        StarClaim::new("[x1x2]", "x1*x2"),
        StarClaim::new("[y1y2]", "y1*y2"),
        StarClaim::new("[x2z2]", "x2*z2"),
        StarClaim::new("[y1z1][y2z2]", "y1*z1*y2*z2"),
        StarClaim::new("[x1y1z1][y2]", "x1*y1*z1*y2"),
        StarClaim::new("[y1][x2y2z2]", "y1*x2*y2*z2"),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarClass {
    pub degree: u32,
    pub class: usize,
    pub label: String,
    /// The representative avoids the excluded generators.
    pub restricted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub claim: StarClaim,
    pub degree: u32,
    pub is_cocycle: bool,
    pub is_zero_class: bool,
    /// The class lies in the span of the computed unit-diagonal classes.
    pub found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarListAudit {
    /// Every positive-degree basis class whose diagonal entry is identically 1.
    pub computed: Vec<StarClass>,
    pub claims: Vec<ClaimCheck>,
    /// Claimed classes not among the computed ones.
    pub missing: Vec<String>,
    /// Computed classes avoiding the excluded generators that the claims do
    /// not span.
    pub extra: Vec<StarClass>,
}

impl StarListAudit {
    pub fn all_claims_found(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Compare the computed unit-diagonal classes with a claimed list. Classes
/// whose representative involves one of `excluded` (such as the dual of a
/// central direct factor) are listed but not counted as extras.
pub fn audit_star_list(
    f: &FiberAction,
    cert: &TriangularCertificate,
    claims: &[StarClaim],
    excluded: &[&str],
) -> Result<StarListAudit, MostowError> {
    let h = &f.cohomology;
    let excluded_idx: Vec<u32> = excluded.iter().filter_map(|n| f.algebra.index_of(n)).collect();
    let mut computed = Vec::new();
    for p in 1..=h.max_degree() {
        for class in cert.unit_diagonal(p) {
            let rep = h.representative(p, class);
            let restricted = rep.terms().all(|(m, _)| excluded_idx.iter().all(|&g| !m.contains(g)));
            let label = cert.label_of(p, class).unwrap_or_default().to_string();
            computed.push(StarClass { degree: p, class, label, restricted });
        }
    }

    let mut checks = Vec::new();
    let mut claimed_vectors: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); h.max_degree() as usize + 1];
    for c in claims {
        let e = f.algebra.parse_product::<Rational>(&c.cocycle)?;
        let degree = e.homogeneous_degree(&f.algebra).unwrap_or(0);
        let (is_cocycle, is_zero_class, found) = match h.class_of(degree, &e) {
            Ok(coords) => {
                let zero = coords.iter().all(Zero::is_zero);
                let ones = cert.unit_diagonal(degree);
                let inside = coords.iter().enumerate().all(|(i, x)| x.is_zero() || ones.contains(&i));
                if !zero {
                    claimed_vectors[degree as usize].push(coords);
                }
                (true, zero, !zero && inside)
            }
            Err(_) => (false, false, false),
        };
        checks.push(ClaimCheck { claim: c.clone(), degree, is_cocycle, is_zero_class, found });
    }
    let missing = checks.iter().filter(|c| !c.found).map(|c| c.claim.label.clone()).collect();

    let extra = computed
        .iter()
        .filter(|s| s.restricted)
        .filter(|s| {
            let n = h.betti(s.degree);
            let span = SubspaceBasis::span(n, &claimed_vectors[s.degree as usize]);
            let mut e = vec![Rational::zero(); n];
            e[s.class] = num_traits::One::one();
            !span.contains(&e)
        })
        .cloned()
        .collect();
    Ok(StarListAudit { computed, claims: checks, missing, extra })
}
