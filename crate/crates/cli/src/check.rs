//! The `check` verification suite.
//!
//! Runs the library's invariants against a user-supplied space: the file's
//! own measure plus `trials` random measures drawn from a seeded generator.
//! Spaces of up to [`EXHAUSTIVE_LIMIT`] atoms enumerate every statement pair;
//! larger spaces use a pool of [`SAMPLED_POOL`] statements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootvec::{
    bhattacharyya, classical_conditional, fisher_rao_distance, hellinger, project, sqrt_vector,
    Error, HypothesisSpace, Measure, SqrtVector, Statement,
};

pub const EXHAUSTIVE_LIMIT: usize = 12;
pub const SAMPLED_POOL: usize = 256;
const MAX_TRIPLES: usize = 200_000;

pub const REL_TOL: f64 = 1e-12;
pub const ABS_FLOOR: f64 = 1e-15;
pub const METRIC_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub tolerance: f64,
    pub worst: f64,
    pub comparisons: u64,
    pub failures: u64,
}

impl PropertyResult {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            worst: 0.0,
            comparisons: 0,
            failures: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, deviation: f64, ok: bool) {
        self.comparisons += 1;
        if deviation.is_nan() || deviation > self.worst {
            self.worst = deviation;
        }
        if !ok {
            self.failures += 1;
        }
    }

    /// Relative deviation, accepted at `tolerance` or below `ABS_FLOOR` absolute.
    fn relative(&mut self, got: f64, expected: f64) {
        let diff = (got - expected).abs();
        let scale = got.abs().max(expected.abs());
        let dev = if scale > 0.0 { diff / scale } else { diff };
        self.record(dev, diff <= ABS_FLOOR || dev <= self.tolerance);
    }

    fn absolute(&mut self, got: f64, expected: f64) {
        let diff = (got - expected).abs();
        self.record(diff, diff <= self.tolerance);
    }

    /// `value ≤ bound` up to tolerance; the deviation is the excess.
    fn at_most(&mut self, value: f64, bound: f64) {
        let excess = (value - bound).max(0.0);
        self.record(excess, excess <= self.tolerance);
    }

    fn mismatch(&mut self) {
        self.record(f64::INFINITY, false);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub atoms: usize,
    pub measures: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub pool_size: usize,
    pub properties: Vec<PropertyResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

fn random_measure(rng: &mut ChaCha8Rng, space: &HypothesisSpace) -> Measure {
    let n = space.len();
    loop {
        let mut w: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        if n > 1 && rng.random_bool(0.2) {
            w[rng.random_range(0..n)] = 0.0;
        }
        if let Ok(m) = Measure::new(space, w) {
            return m;
        }
    }
}

fn statement_pool(rng: &mut ChaCha8Rng, space: &HypothesisSpace) -> (Vec<Statement>, bool) {
    let n = space.len();
    if n <= EXHAUSTIVE_LIMIT {
        let all = space
            .statements()
            .expect("small spaces enumerate")
            .collect();
        return (all, true);
    }
    let mut pool = vec![space.absurdity(), space.truism()];
    pool.extend((0..n).map(|i| space.atom_at(i).expect("index in range")));
    while pool.len() < SAMPLED_POOL.max(n + 2) {
        let picked: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        pool.push(space.statement(picked).expect("indices in range"));
    }
    (pool, false)
}

struct Properties {
    oracle: PropertyResult,
    range: PropertyResult,
    implication: PropertyResult,
    sum_rule: PropertyResult,
    scale: PropertyResult,
    additivity: PropertyResult,
    metric: PropertyResult,
    identities: PropertyResult,
}

impl Properties {
    fn new() -> Self {
        Self {
            oracle: PropertyResult::new("oracle-equivalence", REL_TOL),
            range: PropertyResult::new("bival-range", REL_TOL),
            implication: PropertyResult::new("implication", REL_TOL),
            sum_rule: PropertyResult::new("sum-rule", REL_TOL),
            scale: PropertyResult::new("scale-invariance", REL_TOL),
            additivity: PropertyResult::new("orthogonal-additivity", REL_TOL),
            metric: PropertyResult::new("hellinger-metric", METRIC_TOL),
            identities: PropertyResult::new("distance-identities", REL_TOL),
        }
    }

    fn into_vec(self) -> Vec<PropertyResult> {
        vec![
            self.oracle,
            self.range,
            self.implication,
            self.sum_rule,
            self.scale,
            self.additivity,
            self.metric,
            self.identities,
        ]
    }
}

fn check_measure(
    props: &mut Properties,
    measure: &Measure,
    scale: f64,
    pool: &[Statement],
    truism: &SqrtVector,
) {
    let scaled = measure
        .scaled(scale)
        .expect("positive scale keeps a valid measure");
    let vectors: Vec<SqrtVector> = pool
        .iter()
        .map(|x| sqrt_vector(measure, x).expect("pool shares the space"))
        .collect();
    let scaled_vectors: Vec<SqrtVector> = pool
        .iter()
        .map(|x| sqrt_vector(&scaled, x).expect("pool shares the space"))
        .collect();
    let truism_norm = truism.norm_squared();

    for (yi, y) in pool.iter().enumerate() {
        let vy = &vectors[yi];
        let context_defined = vy.norm_squared() > 0.0;
        if context_defined {
            match project(vy, vy) {
                Ok(p) => props.range.absolute(p, 1.0),
                Err(_) => props.range.mismatch(),
            }
        }
        for (xi, x) in pool.iter().enumerate() {
            let vx = &vectors[xi];
            let inner = project(vx, vy);
            let classical = classical_conditional(measure, x, y);
            match (&inner, &classical) {
                (Ok(a), Ok(b)) => props.oracle.relative(*a, *b),
                (Err(Error::UndefinedContext), Err(Error::UndefinedContext)) => {}
                _ => props.oracle.mismatch(),
            }
            if let Ok(p) = inner {
                props.range.at_most(-p, 0.0);
                props.range.at_most(p, 1.0);
                if y.implies(x).expect("pool shares the space") {
                    props.implication.absolute(p, 1.0);
                }
                match project(&scaled_vectors[xi], &scaled_vectors[yi]) {
                    Ok(q) => props.scale.relative(q, p),
                    Err(_) => props.scale.mismatch(),
                }
            } else if project(&scaled_vectors[xi], &scaled_vectors[yi]).is_ok() {
                props.scale.mismatch();
            }

            // disjoint pairs: sum rule in the truism context and additivity
            if xi < yi && x.disjoint(y).expect("pool shares the space") {
                let joined = sqrt_vector(measure, &x.join(y).expect("pool shares the space"))
                    .expect("pool shares the space");
                let sum = vx.add(vy).expect("pool shares the space");
                if sum != joined {
                    props.additivity.mismatch();
                } else {
                    props
                        .additivity
                        .relative(sum.norm_squared(), vx.norm_squared() + vy.norm_squared());
                }
                if truism_norm > 0.0 {
                    let lhs = project(&joined, truism).expect("truism has positive measure");
                    let rhs = project(vx, truism).expect("truism has positive measure")
                        + project(vy, truism).expect("truism has positive measure");
                    props.sum_rule.absolute(lhs, rhs);
                }
            }
        }
    }
}

fn check_distances(props: &mut Properties, measures: &[Measure], rng: &mut ChaCha8Rng) {
    let count = measures.len();
    for p in measures {
        props
            .metric
            .absolute(hellinger(p, p).expect("same space"), 0.0);
        for q in measures {
            let h = hellinger(p, q).expect("same space");
            let bc = bhattacharyya(p, q).expect("same space");
            let fr = fisher_rao_distance(p, q).expect("same space");
            props
                .metric
                .absolute(h, hellinger(q, p).expect("same space"));
            props.metric.at_most(h, 1.0);
            props.identities.absolute(h * h, 1.0 - bc);
            props
                .identities
                .absolute(fr, 2.0 * (1.0 - h * h).clamp(-1.0, 1.0).acos());
            props.identities.at_most(2.0 * h, fr);
        }
    }
    let mut triangle = |a: &Measure, b: &Measure, c: &Measure| {
        let ab = hellinger(a, b).expect("same space");
        let bound = hellinger(a, c).expect("same space") + hellinger(c, b).expect("same space");
        props.metric.at_most(ab, bound);
    };
    if count.pow(3) <= MAX_TRIPLES {
        for a in measures {
            for b in measures {
                for c in measures {
                    triangle(a, b, c);
                }
            }
        }
    } else {
        for _ in 0..MAX_TRIPLES {
            let (i, j, k) = (
                rng.random_range(0..count),
                rng.random_range(0..count),
                rng.random_range(0..count),
            );
            triangle(&measures[i], &measures[j], &measures[k]);
        }
    }
}

/// Runs every property against `base` and `trials` random measures on its space.
pub fn run_check(base: &Measure, trials: usize, seed: u64) -> CheckReport {
    let space = base.space().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut measures = vec![base.clone()];
    measures.extend((0..trials).map(|_| random_measure(&mut rng, &space)));
    let (pool, exhaustive) = statement_pool(&mut rng, &space);

    let mut props = Properties::new();
    for m in &measures {
        let scale = 10f64.powf(rng.random_range(-3.0..3.0));
        let truism = sqrt_vector(m, &space.truism()).expect("same space");
        check_measure(&mut props, m, scale, &pool, &truism);
    }
    check_distances(&mut props, &measures, &mut rng);

    CheckReport {
        atoms: space.len(),
        measures: measures.len(),
        seed,
        exhaustive,
        pool_size: pool.len(),
        properties: props.into_vec(),
    }
}
