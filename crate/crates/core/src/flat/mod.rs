//! Basic and flat subspaces of the truncated horizontal algebras.
//!
//! Horizontal elements are `S^{≤N} g* ⊗ End V` (classical) or
//! `U^{≤N}(g) ⊗ End V` (quantum). Basic means annihilated by every `L_a`,
//! flat means commuting with the curvature. Everything is an exact kernel
//! computation; the codomain of each map is never truncated.
//!
//! Classical operators are homogeneous in symmetric degree, so tables are per
//! degree. Quantum operators only respect the PBW filtration, so quantum
//! rows describe the cumulative space `U^{≤k}`.

mod space;

use rand::Rng;
use serde::Serialize;

use crate::classical::{ClassicalWeil, Operator};
use crate::error::Result;
use crate::kernels::Poly;
use crate::lie::AlgebraDef;
use crate::linalg::{span_contains, span_rank};
use crate::linalg::{Matrix, Scalar};
use crate::quantum::QuantumWeil;
use crate::random;

pub use space::FlatElement;
use space::{kernel, ClassicalOps, QuantumOps, Space, WeilOps};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Context {
    Classical,
    Quantum,
}

impl Context {
    pub fn name(self) -> &'static str {
        match self {
            Context::Classical => "classical",
            Context::Quantum => "quantum",
        }
    }

    /// Whether degree-`k` rows describe everything up to `k`.
    pub fn cumulative(self) -> bool {
        matches!(self, Context::Quantum)
    }

    pub fn grading(self) -> &'static str {
        match self {
            Context::Classical => "symmetric degree k",
            Context::Quantum => "PBW filtration <= k",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind {
    Basic,
    Flat,
}

#[derive(Clone, Debug)]
pub struct SubspaceBlock {
    pub degree: usize,
    /// Dimension of the horizontal space searched at this degree.
    pub ambient: usize,
    pub basis: Vec<FlatElement>,
}

#[derive(Clone, Debug)]
pub struct SubspaceResult {
    pub kind: SubspaceKind,
    pub context: Context,
    pub blocks: Vec<SubspaceBlock>,
}

impl SubspaceResult {
    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.basis.len()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionRow {
    pub deg: usize,
    pub dim_hor: usize,
    pub dim_basic: usize,
    pub dim_flat: usize,
    pub basic_subset_flat: bool,
    pub s_basic_equals_flat: bool,
    /// `theorem` where basic ⊆ flat is proven, `observed` where it is only evidence.
    pub basic_subset_flat_status: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionRow {
    pub deg: usize,
    pub dim_full_flat: usize,
    pub dim_hor_flat: usize,
    pub odd_factor_dim: usize,
    pub dimensions_match: bool,
    pub contains_products: bool,
}

impl DecompositionRow {
    pub fn passed(&self) -> bool {
        self.dimensions_match && self.contains_products
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub samples: usize,
    pub seed: u64,
    pub flat_basis_size: usize,
    pub products_flat: usize,
    pub lie_images_flat: usize,
    pub contraction_images_flat: usize,
    pub differential_images_flat: usize,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        let s = self.samples;
        self.products_flat == s
            && self.lie_images_flat == s
            && self.contraction_images_flat == s
            && self.differential_images_flat == s
    }
}

/// Everything `weil flat` prints.
#[derive(Clone, Debug, Serialize)]
pub struct FlatReport {
    pub schema: u32,
    pub algebra: Context,
    pub lie: String,
    pub rep: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub grading: &'static str,
    pub per_degree: Vec<InclusionRow>,
    pub decomposition: Vec<DecompositionRow>,
    pub closure: ClosureReport,
    pub seed: u64,
}

impl FlatReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Subspace bases at each degree `0..=n`, as coordinate vectors.
struct Blocks<K> {
    spaces: Vec<Space<K>>,
    kernels: Vec<Vec<Vec<Scalar>>>,
}

fn block_keys<O: WeilOps>(ops: &O, k: usize, cumulative: bool, full: bool) -> Vec<O::Key> {
    let degrees = if cumulative { 0..=k } else { k..=k };
    degrees
        .flat_map(|j| if full { ops.full_keys(j) } else { ops.hor_keys(j) })
        .collect()
}

fn solve<O, F>(ops: &O, n: usize, cumulative: bool, full: bool, maps: &[F]) -> Blocks<O::Key>
where
    O: WeilOps,
    F: Fn(&Poly<O::Key, Matrix>) -> Poly<O::Key, Matrix>,
{
    let mut spaces = Vec::new();
    let mut kernels = Vec::new();
    for k in 0..=n {
        let space = Space::new(block_keys(ops, k, cumulative, full), ops.dim_v());
        kernels.push(kernel(&space, maps));
        spaces.push(space);
    }
    Blocks { spaces, kernels }
}

fn basic_blocks<O: WeilOps>(ops: &O, n: usize, cumulative: bool) -> Blocks<O::Key> {
    let maps: Vec<_> = (0..ops.dim())
        .map(|a| move |x: &Poly<O::Key, Matrix>| ops.apply(Operator::Lie(a), x))
        .collect();
    solve(ops, n, cumulative, false, &maps)
}

fn flat_blocks<O: WeilOps>(ops: &O, n: usize, cumulative: bool, full: bool) -> Blocks<O::Key> {
    solve(ops, n, cumulative, full, &[|x: &Poly<O::Key, Matrix>| ops.curvature_bracket(x)])
}

fn to_result<O: WeilOps>(ops: &O, kind: SubspaceKind, context: Context, b: Blocks<O::Key>) -> SubspaceResult {
    let blocks = b
        .spaces
        .iter()
        .zip(b.kernels)
        .enumerate()
        .map(|(degree, (space, ker))| SubspaceBlock {
            degree,
            ambient: space.len(),
            basis: ker.iter().map(|v| ops.wrap(space.element(v))).collect(),
        })
        .collect();
    SubspaceResult { kind, context, blocks }
}

/// `S·basic` (or `U·basic`) inside the degree-`k` block.
fn products_with_basic<O: WeilOps>(ops: &O, basic: &Blocks<O::Key>, k: usize, cumulative: bool) -> Vec<Vec<Scalar>> {
    let target = &basic.spaces[k];
    let mut out = Vec::new();
    for j in 0..=k {
        let multipliers: Vec<_> = if cumulative {
            (0..=k - j).flat_map(|d| ops.hor_monomials(d)).collect()
        } else {
            ops.hor_monomials(k - j)
        };
        for v in &basic.kernels[j] {
            let b = basic.spaces[j].element(v);
            for m in &multipliers {
                let coords = target
                    .coords_of(&ops.mul(m, &b))
                    .expect("products stay within the truncation");
                out.push(coords);
            }
        }
    }
    out
}

fn inclusion_rows<O: WeilOps>(ops: &O, context: Context, n: usize) -> Vec<InclusionRow> {
    let cumulative = context.cumulative();
    let basic = basic_blocks(ops, n, cumulative);
    let flat = flat_blocks(ops, n, cumulative, false);
    (0..=n)
        .map(|k| {
            let (b, f) = (&basic.kernels[k], &flat.kernels[k]);
            let sb = products_with_basic(ops, &basic, k, cumulative);
            let s_basic_equals_flat = span_contains(f, &sb) && span_rank(&sb) == f.len();
            InclusionRow {
                deg: k,
                dim_hor: basic.spaces[k].len(),
                dim_basic: b.len(),
                dim_flat: f.len(),
                basic_subset_flat: span_contains(f, b),
                s_basic_equals_flat,
                basic_subset_flat_status: match context {
                    Context::Classical => "theorem",
                    Context::Quantum => "observed",
                },
            }
        })
        .collect()
}

fn decomposition_rows<O: WeilOps>(ops: &O, context: Context, n: usize) -> Vec<DecompositionRow> {
    let cumulative = context.cumulative();
    let hor = flat_blocks(ops, n, cumulative, false);
    let full = flat_blocks(ops, n, cumulative, true);
    (0..=n)
        .map(|k| {
            let mut products = Vec::new();
            for v in &hor.kernels[k] {
                let h = hor.spaces[k].element(v);
                for p in ops.odd_multiples(&h) {
                    products.push(full.spaces[k].coords_of(&p).expect("same truncation"));
                }
            }
            let dim_full_flat = full.kernels[k].len();
            let dim_hor_flat = hor.kernels[k].len();
            DecompositionRow {
                deg: k,
                dim_full_flat,
                dim_hor_flat,
                odd_factor_dim: ops.odd_factor_dim(),
                dimensions_match: dim_full_flat == ops.odd_factor_dim() * dim_hor_flat,
                contains_products: span_contains(&full.kernels[k], &products),
            }
        })
        .collect()
}

fn closure<O: WeilOps>(ops: &O, context: Context, n: usize, samples: usize, seed: u64) -> ClosureReport {
    let cumulative = context.cumulative();
    let full = flat_blocks(ops, n, cumulative, true);
    let basis: Vec<Poly<O::Key, Matrix>> = if cumulative {
        full.kernels[n].iter().map(|v| full.spaces[n].element(v)).collect()
    } else {
        (0..=n)
            .flat_map(|k| full.kernels[k].iter().map(|v| full.spaces[k].element(v)).collect::<Vec<_>>())
            .collect()
    };
    let mut report = ClosureReport {
        samples,
        seed,
        flat_basis_size: basis.len(),
        products_flat: 0,
        lie_images_flat: 0,
        contraction_images_flat: 0,
        differential_images_flat: 0,
    };
    if basis.is_empty() {
        report.samples = 0;
        return report;
    }
    let is_flat = |x: &Poly<O::Key, Matrix>| ops.curvature_bracket(x).is_zero();
    let mut rng = random::rng(seed);
    for _ in 0..samples {
        let x = &basis[rng.gen_range(0..basis.len())];
        let y = &basis[rng.gen_range(0..basis.len())];
        let a = rng.gen_range(0..ops.dim());
        report.products_flat += usize::from(is_flat(&ops.mul(x, y)));
        report.lie_images_flat += usize::from(is_flat(&ops.apply(Operator::Lie(a), x)));
        report.contraction_images_flat += usize::from(is_flat(&ops.apply(Operator::Contraction(a), x)));
        report.differential_images_flat += usize::from(is_flat(&ops.apply(Operator::Differential, x)));
    }
    report
}

enum Ops {
    Classical(ClassicalOps),
    Quantum(QuantumOps),
}

fn ops_for(context: Context, def: &AlgebraDef, rep: &str) -> Result<Ops> {
    let rep = def.rep(rep)?.clone();
    Ok(match context {
        Context::Classical => Ops::Classical(ClassicalOps(ClassicalWeil::new(def.lie.clone(), rep)?)),
        Context::Quantum => Ops::Quantum(QuantumOps(QuantumWeil::new(def.lie.clone(), def.form.as_ref(), rep)?)),
    })
}

macro_rules! dispatch {
    ($ops:expr, $o:ident => $body:expr) => {
        match $ops {
            Ops::Classical($o) => $body,
            Ops::Quantum($o) => $body,
        }
    };
}

/// Basic elements of horizontal degree `0..=n`.
pub fn basic_subspace(context: Context, def: &AlgebraDef, rep: &str, n: usize) -> Result<SubspaceResult> {
    let ops = ops_for(context, def, rep)?;
    Ok(dispatch!(&ops, o => to_result(o, SubspaceKind::Basic, context, basic_blocks(o, n, context.cumulative()))))
}

/// Horizontal flat elements of degree `0..=n`.
pub fn flat_subspace(context: Context, def: &AlgebraDef, rep: &str, n: usize) -> Result<SubspaceResult> {
    let ops = ops_for(context, def, rep)?;
    Ok(dispatch!(&ops, o => to_result(o, SubspaceKind::Flat, context, flat_blocks(o, n, context.cumulative(), false))))
}

/// Flat elements of the whole truncated algebra, any exterior/Clifford part.
pub fn full_flat_subspace(context: Context, def: &AlgebraDef, rep: &str, n: usize) -> Result<SubspaceResult> {
    let ops = ops_for(context, def, rep)?;
    Ok(dispatch!(&ops, o => to_result(o, SubspaceKind::Flat, context, flat_blocks(o, n, context.cumulative(), true))))
}

pub fn inclusion_report(context: Context, def: &AlgebraDef, rep: &str, n: usize) -> Result<Vec<InclusionRow>> {
    let ops = ops_for(context, def, rep)?;
    Ok(dispatch!(&ops, o => inclusion_rows(o, context, n)))
}

pub fn decomposition_check(context: Context, def: &AlgebraDef, rep: &str, n: usize) -> Result<Vec<DecompositionRow>> {
    let ops = ops_for(context, def, rep)?;
    Ok(dispatch!(&ops, o => decomposition_rows(o, context, n)))
}

pub fn closure_check(
    context: Context,
    def: &AlgebraDef,
    rep: &str,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<ClosureReport> {
    let ops = ops_for(context, def, rep)?;
    Ok(dispatch!(&ops, o => closure(o, context, n, samples, seed)))
}

/// Inclusion table, decomposition and closure in one report.
pub fn flat_report(
    context: Context,
    def: &AlgebraDef,
    rep: &str,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<FlatReport> {
    let ops = ops_for(context, def, rep)?;
    let (per_degree, decomposition, closure) = dispatch!(&ops, o => (
        inclusion_rows(o, context, n),
        decomposition_rows(o, context, n),
        closure(o, context, n, samples, seed),
    ));
    Ok(FlatReport {
        schema: SCHEMA_VERSION,
        algebra: context,
        lie: def.name.clone(),
        rep: rep.to_string(),
        n,
        grading: context.grading(),
        per_degree,
        decomposition,
        closure,
        seed,
    })
}

#[cfg(test)]
mod tests;
