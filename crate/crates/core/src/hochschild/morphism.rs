//! Maps between Hochschild complexes and a randomized brace-morphism checker.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact::Scalar;
use crate::graded::{GradedQuiver, ObjId, SubquiverMap};
use crate::hochschild::brace::brace_plain;
use crate::hochschild::cochain::{Cochain, Key};
use crate::hochschild::space::random_cochain;

/// A linear map `C(a) → C(a')` computable on cochains of bounded arity.
pub trait CochainMap {
    fn name(&self) -> String;
    fn source(&self) -> &GradedQuiver;
    fn target(&self) -> &GradedQuiver;
    fn apply(&self, phi: &Cochain) -> Result<Cochain>;
}

/// The identity of `C(a)`.
pub struct IdentityMap<'a>(pub &'a GradedQuiver);

impl CochainMap for IdentityMap<'_> {
    fn name(&self) -> String {
        "identity".into()
    }
    fn source(&self) -> &GradedQuiver {
        self.0
    }
    fn target(&self) -> &GradedQuiver {
        self.0
    }
    fn apply(&self, phi: &Cochain) -> Result<Cochain> {
        Ok(phi.clone())
    }
}

/// The restriction `π_b: C(a) → C(b)` to a full subquiver `b ⊂ a`.
pub struct Restriction {
    pub ambient: GradedQuiver,
    pub sub: GradedQuiver,
    pub map: SubquiverMap,
}

impl Restriction {
    pub fn new(ambient: &GradedQuiver, objects: &[ObjId]) -> Result<Self> {
        let (sub, map) = ambient.full_subquiver(objects)?;
        Ok(Restriction { ambient: ambient.clone(), sub, map })
    }
}

/// Restricts `phi` on `ambient` to the full subquiver described by `map`.
pub fn restrict_cochain(ambient: &GradedQuiver, map: &SubquiverMap, phi: &Cochain) -> Cochain {
    let mut out = Cochain::zero(phi.hochschild_degree());
    for (k, v) in phi.entries() {
        let Some(start) = map.sub_object(k.start) else { continue };
        if k.args.iter().any(|&a| map.sub_object(ambient.arrow(a).target).is_none()) {
            continue;
        }
        let args = k
            .args
            .iter()
            .map(|&a| map.sub_arrow(a).expect("full subquiver contains the arrow"))
            .collect();
        let value = v.map_arrows(|b| map.sub_arrow(b).expect("full subquiver contains the value"));
        out.add_entry(Key::new(start, args), &value);
    }
    out
}

impl CochainMap for Restriction {
    fn name(&self) -> String {
        "restriction".into()
    }
    fn source(&self) -> &GradedQuiver {
        &self.ambient
    }
    fn target(&self) -> &GradedQuiver {
        &self.sub
    }
    fn apply(&self, phi: &Cochain) -> Result<Cochain> {
        Ok(restrict_cochain(&self.ambient, &self.map, phi))
    }
}

/// Multiplies the components of one arity by a scalar. Not a brace morphism
/// unless the scalar is one; used as a negative control.
pub struct ScaleArity<'a> {
    pub quiver: &'a GradedQuiver,
    pub arity: usize,
    pub factor: Scalar,
}

impl CochainMap for ScaleArity<'_> {
    fn name(&self) -> String {
        format!("scale arity {} by {}", self.arity, self.factor)
    }
    fn source(&self) -> &GradedQuiver {
        self.quiver
    }
    fn target(&self) -> &GradedQuiver {
        self.quiver
    }
    fn apply(&self, phi: &Cochain) -> Result<Cochain> {
        Ok(phi.map_values(|k, v| if k.arity() == self.arity { v.scaled(&self.factor) } else { v.clone() }))
    }
}

/// Sampling budget for randomized checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    pub samples: usize,
    pub arity_max: usize,
    /// Internal degrees are drawn from this closed range.
    pub degrees: (i64, i64),
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { seed: 0, samples: 50, arity_max: 3, degrees: (-2, 2) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub map: String,
    pub samples: usize,
    /// Description of the first sample with `Ψ(x{y…}) ≠ Ψ(x){Ψ(y)…}`.
    pub counterexample: Option<String>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Draws a nonzero random cochain, retrying a few shapes.
pub(crate) fn sample_nonzero(q: &GradedQuiver, rng: &mut ChaCha8Rng, arity_range: (usize, usize), cfg: &SampleConfig) -> Cochain {
    let mut last = Cochain::zero(0);
    for _ in 0..24 {
        let n = rng.gen_range(arity_range.0..=arity_range.1);
        let i = rng.gen_range(cfg.degrees.0..=cfg.degrees.1);
        let c = random_cochain(q, n, i, 0.5, rng);
        if !c.is_zero() {
            return c;
        }
        last = c;
    }
    last
}

/// Checks `Ψ(x{y_1..y_k}) = Ψ(x){Ψ(y_1)..Ψ(y_k)}` for `k ∈ {1, 2}` on
/// random samples.
pub fn is_brace_morphism(map: &dyn CochainMap, cfg: &SampleConfig) -> Result<MorphismReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let src = map.source();
    let tgt = map.target();
    for s in 0..cfg.samples {
        let x = sample_nonzero(src, &mut rng, (1, cfg.arity_max), cfg);
        let k = rng.gen_range(1..=2usize);
        let ys: Vec<Cochain> = (0..k)
            .map(|_| sample_nonzero(src, &mut rng, (0, cfg.arity_max.saturating_sub(1)), cfg))
            .collect();
        let yrefs: Vec<&Cochain> = ys.iter().collect();
        let lhs = map.apply(&brace_plain(src, &x, &yrefs))?;
        let px = map.apply(&x)?;
        let pys: Vec<Cochain> = ys.iter().map(|y| map.apply(y)).collect::<Result<_>>()?;
        let prefs: Vec<&Cochain> = pys.iter().collect();
        let rhs = brace_plain(tgt, &px, &prefs);
        if lhs.minus(&rhs).map(|d| !d.is_zero()).unwrap_or(true) {
            return Ok(MorphismReport {
                map: map.name(),
                samples: s + 1,
                counterexample: Some(format!(
                    "sample {s}: x of degree {} with {} argument(s); components differ",
                    x.hochschild_degree(),
                    k
                )),
            });
        }
    }
    Ok(MorphismReport { map: map.name(), samples: cfg.samples, counterexample: None })
}
