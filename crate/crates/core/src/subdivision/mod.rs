//! Subdivision maps between posets: validation, restriction, skeletal posets and the cd-index
//! decomposition over the faces of the base.

mod decompose;
mod skeletal;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::poset::{adjoin_max, is_lower_eulerian, is_near_eulerian, GradedPoset};

pub use decompose::{decompose_cd, Decomposition, DecompositionRow};
pub use skeletal::{skeletal_family, FlagClass, Origin, SkeletalFamily};

/// Verdict of a validation pass with one entry per failing element or pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// True when no failure was found.
    pub valid: bool,
    /// `(element, reason)` for every violated condition.
    pub failures: Vec<(String, String)>,
}

impl ValidationReport {
    fn from_failures(failures: Vec<(String, String)>) -> Self {
        Self { valid: failures.is_empty(), failures }
    }

    fn first(&self) -> String {
        self.failures.first().map(|(e, r)| format!("{e}: {r}")).unwrap_or_default()
    }
}

/// An order-preserving surjection from a subdividing poset onto a base poset.
///
/// Validation verdicts are computed on first request and cached on the value.
#[derive(Clone, Debug)]
pub struct SubdivisionMap {
    source: GradedPoset,
    target: GradedPoset,
    carrier: Vec<usize>,
    strong_eulerian: OnceLock<ValidationReport>,
    strong_formal: OnceLock<ValidationReport>,
}

impl SubdivisionMap {
    /// Builds a map from `(source id, target id)` pairs, one per source element.
    pub fn new<S: AsRef<str>, T: AsRef<str>>(
        source: GradedPoset,
        target: GradedPoset,
        carrier: &[(S, T)],
    ) -> Result<Self> {
        let mut image = vec![None; source.len()];
        for (s, t) in carrier {
            let x = source.element(s.as_ref())?;
            let y = target.element(t.as_ref())?;
            if image[x].replace(y).is_some() {
                return Err(Error::InvalidSubdivision(format!("`{}` has two carriers", s.as_ref())));
            }
        }
        let carrier = image
            .iter()
            .enumerate()
            .map(|(x, y)| y.ok_or_else(|| Error::InvalidSubdivision(format!("`{}` has no carrier", source.id(x)))))
            .collect::<Result<Vec<usize>>>()?;
        Self::from_indices(source, target, carrier)
    }

    /// Builds a map from a carrier given by element indices.
    pub fn from_indices(source: GradedPoset, target: GradedPoset, carrier: Vec<usize>) -> Result<Self> {
        if carrier.len() != source.len() || carrier.iter().any(|&y| y >= target.len()) {
            return Err(Error::InvalidSubdivision("carrier does not match the posets".into()));
        }
        for (x, y) in source.covers() {
            if !target.leq(carrier[x], carrier[y]) {
                return Err(Error::InvalidSubdivision(format!(
                    "not order preserving: `{}` < `{}` but `{}` is not below `{}`",
                    source.id(x),
                    source.id(y),
                    target.id(carrier[x]),
                    target.id(carrier[y])
                )));
            }
        }
        let mut hit = vec![false; target.len()];
        for &y in &carrier {
            hit[y] = true;
        }
        if let Some(y) = hit.iter().position(|h| !h) {
            return Err(Error::InvalidSubdivision(format!("not surjective: nothing maps to `{}`", target.id(y))));
        }
        if let Some(s) = source.top() {
            let t = target
                .top()
                .ok_or_else(|| Error::InvalidSubdivision("source has a maximum but the target does not".into()))?;
            if let Some(x) = (0..source.len()).find(|&x| (x == s) != (carrier[x] == t)) {
                return Err(Error::InvalidSubdivision(format!(
                    "only the maximum may map to the maximum; `{}` violates this",
                    source.id(x)
                )));
            }
        }
        Ok(Self { source, target, carrier, strong_eulerian: OnceLock::new(), strong_formal: OnceLock::new() })
    }

    /// The subdividing poset.
    pub fn source(&self) -> &GradedPoset {
        &self.source
    }

    /// The base poset.
    pub fn target(&self) -> &GradedPoset {
        &self.target
    }

    /// Carrier of every source element, by index.
    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    /// Carrier of one source element.
    pub fn carrier_of(&self, x: usize) -> usize {
        self.carrier[x]
    }

    /// Carrier as `(source id, target id)` pairs in source order.
    pub fn carrier_ids(&self) -> Vec<(String, String)> {
        self.carrier.iter().enumerate().map(|(x, &y)| (self.source.id(x).into(), self.target.id(y).into())).collect()
    }

    /// The same map with a new maximum adjoined to both posets and sent to the new maximum.
    pub fn with_top(&self) -> Result<Self> {
        let source = adjoin_max(&self.source);
        let target = adjoin_max(&self.target);
        let mut carrier = self.carrier.clone();
        carrier.push(self.target.len());
        Self::from_indices(source, target, carrier)
    }

    /// Source elements carried by faces of `sigma`, in index order.
    pub fn preimage_ideal(&self, sigma: usize) -> Vec<usize> {
        (0..self.source.len()).filter(|&x| self.target.leq(self.carrier[x], sigma)).collect()
    }

    /// The preimage ideal of `sigma` with a maximum adjoined.
    pub fn face_hat(&self, sigma: usize) -> GradedPoset {
        adjoin_max(&self.source.induced(&self.preimage_ideal(sigma)))
    }

    /// Restriction to the faces of the target element with id `face`.
    pub fn restrict(&self, face: &str) -> Result<Self> {
        let f = self.target.index_of(face).ok_or_else(|| Error::FaceNotFound(face.to_string()))?;
        let keep_source = self.preimage_ideal(f);
        let keep_target: Vec<usize> = (0..self.target.len()).filter(|&y| self.target.leq(y, f)).collect();
        let mut pos = vec![usize::MAX; self.target.len()];
        for (i, &y) in keep_target.iter().enumerate() {
            pos[y] = i;
        }
        let carrier = keep_source.iter().map(|&x| pos[self.carrier[x]]).collect();
        Self::from_indices(self.source.induced(&keep_source), self.target.induced(&keep_target), carrier)
    }

    fn lower_eulerian_failures(&self, failures: &mut Vec<(String, String)>) -> bool {
        for (name, p) in [("source", &self.source), ("target", &self.target)] {
            match is_lower_eulerian(p) {
                Ok(true) => {}
                Ok(false) => failures.push((name.into(), "not lower Eulerian".into())),
                Err(e) => failures.push((name.into(), e.to_string())),
            }
        }
        failures.is_empty()
    }

    /// Checks that both posets are lower Eulerian of equal rank and that every preimage ideal
    /// has the rank of its face and becomes near-Eulerian after adjoining a maximum.
    pub fn validate_strong_eulerian(&self) -> &ValidationReport {
        self.strong_eulerian.get_or_init(|| {
            let mut failures = Vec::new();
            if !self.lower_eulerian_failures(&mut failures) {
                return ValidationReport::from_failures(failures);
            }
            if self.source.rank() != self.target.rank() {
                failures.push(("source".into(), "rank differs from the target".into()));
            }
            for sigma in 0..self.target.len() {
                let ideal = self.preimage_ideal(sigma);
                let rank = ideal.iter().map(|&x| self.source.rank_of(x)).max();
                let want = self.target.rank_of(sigma);
                if rank != Some(want) {
                    failures.push((
                        self.target.id(sigma).into(),
                        format!("preimage ideal has rank {rank:?}, expected {want}"),
                    ));
                } else if !is_near_eulerian(&adjoin_max(&self.source.induced(&ideal))) {
                    failures.push((
                        self.target.id(sigma).into(),
                        "preimage ideal plus a maximum is not near-Eulerian".into(),
                    ));
                }
            }
            ValidationReport::from_failures(failures)
        })
    }

    /// Checks rank increase, strong surjectivity and the alternating-sum condition
    /// `sum_{y >= z, phi(y) <= x} (-1)^(rho(x) - rho(y)) = [phi(z) = x]` for all `phi(z) <= x`.
    pub fn validate_strong_formal(&self) -> &ValidationReport {
        self.strong_formal.get_or_init(|| {
            let mut failures = Vec::new();
            if !self.lower_eulerian_failures(&mut failures) {
                return ValidationReport::from_failures(failures);
            }
            let (s, t) = (&self.source, &self.target);
            for z in 0..s.len() {
                if s.rank_of(z) > t.rank_of(self.carrier[z]) {
                    failures.push((s.id(z).into(), "rank decreases under the carrier".into()));
                }
            }
            for z in 0..s.len() {
                for x in 0..t.len() {
                    if !t.leq(self.carrier[z], x) {
                        continue;
                    }
                    let rx = t.rank_of(x) as i64;
                    let mut sum = 0i64;
                    let mut reaches = false;
                    for y in (0..s.len()).filter(|&y| s.leq(z, y) && t.leq(self.carrier[y], x)) {
                        let ry = s.rank_of(y) as i64;
                        sum += if (rx - ry) % 2 == 0 { 1 } else { -1 };
                        reaches |= ry == rx;
                    }
                    let label = format!("({}, {})", s.id(z), t.id(x));
                    if !reaches {
                        failures.push((label.clone(), "not strongly surjective".into()));
                    }
                    let want = i64::from(self.carrier[z] == x);
                    if sum != want {
                        failures.push((label, format!("alternating sum is {sum}, expected {want}")));
                    }
                }
            }
            ValidationReport::from_failures(failures)
        })
    }

    /// Errors with `ValidationRequired` unless the map is a strong Eulerian subdivision.
    pub fn require_strong_eulerian(&self) -> Result<()> {
        let report = self.validate_strong_eulerian();
        if report.valid {
            Ok(())
        } else {
            Err(Error::ValidationRequired(format!("not strong Eulerian at {}", report.first())))
        }
    }

    /// Errors with `ValidationRequired` unless the map is a strong formal subdivision.
    pub fn require_strong_formal(&self) -> Result<()> {
        let report = self.validate_strong_formal();
        if report.valid {
            Ok(())
        } else {
            Err(Error::ValidationRequired(format!("not strong formal at {}", report.first())))
        }
    }
}
