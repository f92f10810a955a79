use std::collections::BTreeSet;
use std::fmt;

use braid_core::GeneralizedBraid;

use crate::artin::artin_action;
use crate::error::AutError;
use crate::freeword::{FreeLetter, FreeWord};
use crate::stallings::generates_whole_group;

/// A homomorphism from the free product on the standard generators
/// `d0 .. d(m-1)` to the free product on generators indexed by an endpoint
/// set `E` with `|E| = m`, recorded by the image of each domain generator.
///
/// Candidates for braid-induced maps have the dagger shape: each image is
/// a conjugate `u⁻¹ d(t) u` of a single positive generator, the targets
/// `t` run over `E` exactly once, the product `d0 d1 ⋯ d(m-1)` maps to
/// `d(E[0]) ⋯ d(E[m-1])`, and the map is invertible.  [`check_dagger`]
/// verifies all four conditions; [`induced_level_map`] produces maps
/// satisfying them by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DaggerAutomorphism {
    endpoints: Vec<usize>,
    images: Vec<FreeWord>,
}

/// The conjugate-of-generator decomposition of one image:
/// `image = u⁻¹ · d(target) · u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugatorData {
    pub target: usize,
    pub conjugator: FreeWord,
}

impl DaggerAutomorphism {
    /// Builds a map from an endpoint set and one image per domain
    /// generator.  Images must use only generators from `E`.
    pub fn new(endpoints: Vec<usize>, images: Vec<FreeWord>) -> Result<Self, AutError> {
        if endpoints.is_empty() {
            return Err(AutError::Precondition(
                "an automorphism needs at least one generator".into(),
            ));
        }
        if !endpoints.windows(2).all(|w| w[0] < w[1]) {
            return Err(AutError::Precondition(format!(
                "endpoints must be strictly increasing, got {endpoints:?}"
            )));
        }
        if images.len() != endpoints.len() {
            return Err(AutError::Precondition(format!(
                "{} endpoints but {} images",
                endpoints.len(),
                images.len()
            )));
        }
        let allowed: BTreeSet<usize> = endpoints.iter().copied().collect();
        for (i, image) in images.iter().enumerate() {
            if let Some(stray) = image.support().difference(&allowed).next() {
                return Err(AutError::IndexOutOfRange {
                    index: *stray,
                    context: format!("image of d{i} uses a generator outside the endpoint set"),
                });
            }
        }
        Ok(DaggerAutomorphism { endpoints, images })
    }

    /// The identity on `m` generators (endpoints `0 .. m-1`).
    pub fn identity(m: usize) -> Self {
        DaggerAutomorphism {
            endpoints: (0..m).collect(),
            images: (0..m).map(FreeWord::generator).collect(),
        }
    }

    /// The domain size `m` (strand count of an inducing braid).
    pub fn size(&self) -> usize {
        self.endpoints.len()
    }

    pub fn endpoints(&self) -> &[usize] {
        &self.endpoints
    }

    /// Whether the endpoints are exactly `0 .. m-1`.
    pub fn has_standard_endpoints(&self) -> bool {
        self.endpoints.iter().copied().eq(0..self.endpoints.len())
    }

    /// The image of the domain generator `d<i>`.
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Applies the map to a word over the domain generators `d0..d(m-1)`.
    pub fn apply(&self, word: &FreeWord) -> Result<FreeWord, AutError> {
        let m = self.size();
        word.substitute(|index| {
            if index < m {
                Ok(self.images[index].clone())
            } else {
                Err(AutError::IndexOutOfRange {
                    index,
                    context: format!("the map is defined on {m} generators"),
                })
            }
        })
    }

    /// `self` then `next`, as one map.  The intermediate generators must
    /// line up: `self` needs standard endpoints matching `next`'s domain.
    pub fn then(&self, next: &DaggerAutomorphism) -> Result<DaggerAutomorphism, AutError> {
        if !self.has_standard_endpoints() || self.size() != next.size() {
            return Err(AutError::Precondition(format!(
                "cannot compose: intermediate endpoints {:?} do not form the domain of a map on {} generators",
                self.endpoints,
                next.size()
            )));
        }
        let images = self
            .images
            .iter()
            .map(|image| next.apply(image))
            .collect::<Result<Vec<_>, _>>()?;
        DaggerAutomorphism::new(next.endpoints.clone(), images)
    }

    /// The conjugate-of-generator decomposition of the image of `d<i>`,
    /// if it has that shape.  A reduced word is `u⁻¹ d(t) u` exactly when
    /// its length is odd, the middle letter is positive, and the two
    /// halves mirror each other; the decomposition is then unique, so
    /// this also yields the shortest conjugator.
    pub fn conjugator_data(&self, i: usize) -> Option<ConjugatorData> {
        let letters = self.images[i].letters();
        if letters.len().is_multiple_of(2) {
            return None;
        }
        let mid = letters.len() / 2;
        if letters[mid].sign != braid_core::Sign::Positive {
            return None;
        }
        for k in 0..mid {
            if letters[k] != letters[letters.len() - 1 - k].inverse() {
                return None;
            }
        }
        Some(ConjugatorData {
            target: letters[mid].index,
            conjugator: FreeWord::from_letters(letters[mid + 1..].iter().copied()),
        })
    }

    /// The strand bijection `σ: {0..m-1} → E` read off the images, if
    /// every image is a conjugated generator and the targets exhaust `E`.
    pub fn sigma(&self) -> Option<Vec<usize>> {
        let mut sigma = Vec::with_capacity(self.size());
        let mut seen = BTreeSet::new();
        for i in 0..self.size() {
            let data = self.conjugator_data(i)?;
            if !seen.insert(data.target) || self.endpoints.binary_search(&data.target).is_err() {
                return None;
            }
            sigma.push(data.target);
        }
        Some(sigma)
    }
}

impl fmt::Display for DaggerAutomorphism {
    /// The dagger file format: a header naming `m` and `E`, then one line
    /// `i -> <image>` per domain generator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DAGGER m={} E=", self.size())?;
        for (k, e) in self.endpoints.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        for (i, image) in self.images.iter().enumerate() {
            write!(f, "\n{i} -> {image}")?;
        }
        Ok(())
    }
}

/// The automorphism a generalized braid induces on free products: act with
/// the underlying word on the standard generators, then relabel the
/// targets through the endpoint set.
///
/// Braid actions always produce dagger-shaped images, so a failure to
/// extract conjugator data here is an internal error, not a caller error.
pub fn induced_level_map(braid: &GeneralizedBraid) -> Result<DaggerAutomorphism, AutError> {
    let endpoints = braid.endpoints().to_vec();
    let mut images = Vec::with_capacity(braid.strands());
    for i in 0..braid.strands() {
        let raw = artin_action(braid.word(), &FreeWord::generator(i))?;
        let relabeled = FreeWord::from_letters(raw.letters().iter().map(|l| FreeLetter {
            index: endpoints[l.index],
            sign: l.sign,
        }));
        images.push(relabeled);
    }
    let map = DaggerAutomorphism::new(endpoints, images)?;
    if map.sigma().is_none() {
        return Err(AutError::Extraction(format!(
            "induced image of a braid word lost its conjugate shape:\n{map}"
        )));
    }
    Ok(map)
}

/// The outcome of [`check_dagger`]: empty failure list means pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaggerReport {
    pub failures: Vec<String>,
}

impl DaggerReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for DaggerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "all conditions hold");
        }
        for (k, failure) in self.failures.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{failure}")?;
        }
        Ok(())
    }
}

/// Checks the four dagger conditions, reporting every failure rather than
/// stopping at the first:
///
/// 1. each image is a conjugate `u⁻¹ d(t) u` of a single positive
///    generator;
/// 2. the targets form a bijection from the domain onto the endpoints;
/// 3. the product `d0 d1 ⋯ d(m-1)` maps to `d(E[0]) ⋯ d(E[m-1])`;
/// 4. the map is an automorphism, certified by folding: the images
///    generate the whole target group, and a surjection between free
///    groups of equal finite rank is an isomorphism.
pub fn check_dagger(map: &DaggerAutomorphism) -> DaggerReport {
    let mut failures = Vec::new();

    let mut targets = Vec::new();
    for i in 0..map.size() {
        match map.conjugator_data(i) {
            Some(data) => targets.push(data.target),
            None => failures.push(format!(
                "image of d{i} is not a conjugate of a single positive generator: {}",
                map.image(i)
            )),
        }
    }

    if targets.len() == map.size() {
        let hit: BTreeSet<usize> = targets.iter().copied().collect();
        let expected: BTreeSet<usize> = map.endpoints().iter().copied().collect();
        if targets.len() != hit.len() || hit != expected {
            failures.push(format!(
                "targets do not match the endpoints one-to-one: sigma {targets:?}, endpoints {:?}",
                map.endpoints()
            ));
        }
    }

    let domain_product =
        FreeWord::from_letters((0..map.size()).map(FreeLetter::positive));
    let endpoint_product = FreeWord::from_letters(
        map.endpoints().iter().map(|&e| FreeLetter::positive(e)),
    );
    match map.apply(&domain_product) {
        Ok(image) if image == endpoint_product => {}
        Ok(image) => failures.push(format!(
            "the product of all generators maps to {image}, expected {endpoint_product}"
        )),
        Err(err) => failures.push(format!(
            "could not apply the map to {domain_product}: {err}"
        )),
    }

    let labels: BTreeSet<usize> = map.endpoints().iter().copied().collect();
    if !generates_whole_group(map.images(), &labels) {
        failures
            .push("not an automorphism: the images fail to generate the whole group".into());
    }

    DaggerReport { failures }
}
