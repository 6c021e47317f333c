//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Everything here is exact — no tolerances anywhere. Run with
//! `cargo test --test acceptance -- --nocapture` to see the summary lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use preproj_core::quiver::Family;
use preproj_core::wreath::IsoWitness;
use preproj_core::*;

macro_rules! criterion {
    ($test_name:ident, $label:expr, $body:expr) => {
        #[test]
        fn $test_name() {
            let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe($body));
            match outcome {
                Ok(detail) => println!("acceptance {}: PASS ({})", $label, detail),
                Err(panic) => {
                    println!("acceptance {}: FAIL", $label);
                    std::panic::resume_unwind(panic);
                }
            }
        }
    };
}

fn rational(rng: &mut ChaCha8Rng, num_range: i64, den_range: i64) -> Scalar {
    let num = rng.gen_range(-num_range..=num_range);
    let den = rng.gen_range(1..=den_range);
    Scalar::from_ratio(num, den)
}

fn nonzero_rational(rng: &mut ChaCha8Rng, num_range: i64, den_range: i64) -> Scalar {
    loop {
        let s = rational(rng, num_range, den_range);
        if !s.is_zero() {
            return s;
        }
    }
}

fn gaussian(rng: &mut ChaCha8Rng) -> Scalar {
    let re = rational(rng, 4, 3);
    if rng.gen_bool(0.5) {
        let im = rational(rng, 3, 2);
        &re + &(&im * &Scalar::i())
    } else {
        re
    }
}

/// Random weight on the window, with a forced zero interval sum half of the
/// time so the classification has something to find.
fn random_weight(rng: &mut ChaCha8Rng, window: &[Vertex], complex: bool) -> Weight {
    let mut lam = Weight::from_patch(window.iter().map(|&v| {
        let val = if complex { gaussian(rng) } else { rational(rng, 3, 3) };
        (v, val)
    }));
    if rng.gen_bool(0.5) && window.len() >= 2 {
        let a = rng.gen_range(0..window.len() - 1);
        let b = rng.gen_range(a + 1..window.len());
        let mut sum = Scalar::zero();
        for &v in &window[a..b] {
            sum += &lam.at(v);
        }
        lam.set(window[b], -&sum);
    }
    lam
}

fn families() -> Vec<Quiver> {
    vec![Quiver::a_plus_inf(), Quiver::a_inf(), Quiver::d_inf()]
}

fn within(name: &str, elapsed: Duration, budget: Duration) {
    assert!(
        elapsed <= budget,
        "criterion {name} exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
}

fn certify(wit: &IsoWitness) {
    for (t, m) in &wit.map {
        let inv = &wit.inverse[t];
        assert_eq!(&(m * inv), &Matrix::identity(m.rows()));
        assert_eq!(&(inv * m), &Matrix::identity(m.rows()));
    }
}

// Criterion 1: for random rational weights on A+∞ and A∞ windows of size
// ≤ 6, the classification agrees with the tree-flow oracle on every interval
// root. Exact agreement, under 10 seconds.
criterion!(criterion_1_oracle_equivalence, "1 (oracle equivalence)", || {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let quivers = [Quiver::a_plus_inf(), Quiver::a_inf()];
    let mut weights_tested = 0usize;
    let mut intervals_tested = 0usize;
    let mut positives = 0usize;
    while weights_tested < 200 {
        for q in &quivers {
            let size = rng.gen_range(1..=6usize);
            let lo = match q.family() {
                Family::AInf => rng.gen_range(-4..=1i64),
                _ => rng.gen_range(0..=3i64),
            };
            let window: Vec<Vertex> = (lo..lo + size as i64).collect();
            let lam = random_weight(&mut rng, &window, false);
            weights_tested += 1;
            for (ai, &s) in window.iter().enumerate() {
                for &r in &window[ai..] {
                    let alpha = DimVec::interval(s, r);
                    let classified = exists_simple(q, &lam, &alpha).unwrap().exists;
                    let oracled = oracle_exists_simple(q, &lam, &alpha).unwrap();
                    assert_eq!(
                        classified, oracled,
                        "disagreement on {window:?}, interval [{s},{r}]"
                    );
                    intervals_tested += 1;
                    positives += classified as usize;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within("1", elapsed, Duration::from_secs(10));
    assert!(positives > 50, "generator produced too few simples to be meaningful");
    format!("{weights_tested} weights, {intervals_tested} intervals, {positives} simples, {elapsed:?}")
});

// Criterion 2: the Khare enumeration and the interval conditions produce the
// same (s,r) sets for random f of degree ≤ 3 at r_max = 20, including the
// worked instance f = −4Δ ↦ V(1,0). Under 5 seconds.
criterion!(criterion_2_khare_equivalence, "2 (Khare equivalence)", || {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let q = Quiver::a_plus_inf();
    let r_max = 20u64;

    let casimir = |i: u64| BigRational::new((i * (i + 2)).into(), 8.into());
    let mut polys: Vec<CasimirPolynomial> = vec![CasimirPolynomial::from_ints(&[0, -4])];
    while polys.len() < 100 {
        let deg = rng.gen_range(0..=3usize);
        let mut coeffs: Vec<BigRational> = (0..=deg)
            .map(|_| {
                BigRational::new(rng.gen_range(-6..=6i64).into(), rng.gen_range(1..=3i64).into())
            })
            .collect();
        if rng.gen_bool(0.5) {
            // Engineer Σ_{i=s}^r (i+1)(1+f(b_i)) = 0 by solving for one
            // coefficient; the b-power sums are positive, hence invertible.
            let s = rng.gen_range(0..=6u64);
            let r = rng.gen_range(s..=10u64);
            let j = rng.gen_range(0..coeffs.len());
            let mut constant = BigRational::zero();
            let mut stiffness = BigRational::zero();
            for i in s..=r {
                let b = casimir(i);
                let dim = BigRational::from_integer((i + 1).into());
                let mut val = BigRational::one();
                for (k, c) in coeffs.iter().enumerate() {
                    if k != j {
                        val += c * b.pow(k as i32);
                    }
                }
                constant += &dim * val;
                stiffness += &dim * b.pow(j as i32);
            }
            if !stiffness.is_zero() {
                coeffs[j] = -constant / stiffness;
            }
        }
        polys.push(CasimirPolynomial::new(coeffs));
    }

    let mut nonempty = 0usize;
    for f in &polys {
        let from_vrs: BTreeSet<(u64, u64)> =
            enumerate_vrs(f, r_max).into_iter().map(|m| (m.s, m.r)).collect();
        let lam = khare_lambda(f);
        let mut from_intervals = BTreeSet::new();
        for s in 0..=r_max {
            for r in s..=r_max {
                if interval_conditions(&q, &lam, s as Vertex, r as Vertex).unwrap() {
                    from_intervals.insert((s, r));
                }
            }
        }
        assert_eq!(from_vrs, from_intervals, "mismatch for f = {f:?}");
        nonempty += (!from_vrs.is_empty()) as usize;
    }
    let worked = enumerate_vrs(&CasimirPolynomial::from_ints(&[0, -4]), r_max);
    assert!(
        worked.iter().any(|m| (m.s, m.r) == (0, 1)),
        "f = −4Δ must produce V(1,0)"
    );
    assert!(nonempty >= 30, "too few polynomials with modules");
    let elapsed = start.elapsed();
    within("2", elapsed, Duration::from_secs(5));
    format!("{} polynomials, {nonempty} with modules, {elapsed:?}", polys.len())
});

/// Generator shared by criteria 3–4: relation-passing wreath modules with
/// n ∈ {1,2} on windows of ≤ 4 vertices, component dims ≤ 2, together with
/// their parameters. Every emitted module is verified against the checker.
fn passing_modules(seed: u64, want: usize) -> Vec<(Quiver, WreathRep, Weight, Scalar)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(Quiver, WreathRep, Weight, Scalar)> = Vec::new();
    while out.len() < want {
        let q = match rng.gen_range(0..3) {
            0 => Quiver::a_plus_inf(),
            1 => Quiver::a_inf(),
            _ => Quiver::d_inf(),
        };
        let size = rng.gen_range(2..=4usize);
        let lo = match q.family() {
            Family::AInf => rng.gen_range(-3..=0i64),
            _ => 0,
        };
        let window: Vec<Vertex> = (lo..lo + size as i64).collect();
        let lam = random_weight(&mut rng, &window, false);
        let oracle_simples = |q: &Quiver, lam: &Weight| -> Vec<Rep> {
            let win = q.window(window.iter().copied()).unwrap();
            enumerate_positive_roots(q, &win)
                .unwrap()
                .iter()
                .filter(|a| a.is_multiplicity_free())
                .filter_map(|a| oracle_simple(q, lam, a).unwrap())
                .collect()
        };
        match rng.gen_range(0..4) {
            0 => {
                // Rank 1: a simple from the oracle, or a direct sum of two.
                let simples = oracle_simples(&q, &lam);
                if simples.is_empty() {
                    continue;
                }
                let pick = rng.gen_range(0..simples.len());
                let rep = if simples.len() > 1 && rng.gen_bool(0.4) {
                    let second = rng.gen_range(0..simples.len());
                    simples[pick].direct_sum(&simples[second])
                } else {
                    simples[pick].clone()
                };
                let nu = if rng.gen_bool(0.5) { rational(&mut rng, 3, 2) } else { Scalar::zero() };
                out.push((q, WreathRep::from_rank1(&rep), lam, nu));
            }
            1 => {
                // n = 2 induced from a rank-1 simple at ν = 0.
                let simples = oracle_simples(&q, &lam);
                if simples.is_empty() {
                    continue;
                }
                let y = simples[rng.gen_range(0..simples.len())].clone();
                let diagram = if rng.gen_bool(0.5) {
                    YoungDiagram::new(vec![2]).unwrap()
                } else {
                    YoungDiagram::new(vec![1, 1]).unwrap()
                };
                let module = outer_tensor_induce(&q, &[2], &[diagram], &[y], &lam).unwrap();
                if module.total_dim() > 16 {
                    continue;
                }
                out.push((q, module, lam, Scalar::zero()));
            }
            2 => {
                // n = 2 zero-arrow module at ν ≠ 0: single vertex, rectangular
                // diagram, λ_i = ν(a − b).
                let nu = nonzero_rational(&mut rng, 3, 2);
                let vertex = window[rng.gen_range(0..window.len())];
                let (diagram, gap) = if rng.gen_bool(0.5) {
                    (YoungDiagram::new(vec![2]).unwrap(), -1i64)
                } else {
                    (YoungDiagram::new(vec![1, 1]).unwrap(), 1i64)
                };
                let lam = lam.with(vertex, &Scalar::from_int(gap) * &nu);
                let y = Rep::new([(vertex, 1usize)], []).unwrap();
                let module =
                    outer_tensor_induce(&q, &[2], &[diagram], &[y], &Weight::zero()).unwrap();
                out.push((q, module, lam, nu));
            }
            _ => {
                // A reflected variant of a rank-1 instance, for diversity.
                let simples = oracle_simples(&q, &lam);
                if simples.is_empty() {
                    continue;
                }
                let rep = WreathRep::from_rank1(&simples[rng.gen_range(0..simples.len())]);
                let i = window[rng.gen_range(0..window.len())];
                let nu = Scalar::zero();
                let Ok(reflected) = reflect(&q, &rep, &lam, &nu, i) else {
                    continue;
                };
                let rlam = dual_reflection(&q, i, &lam);
                out.push((q, reflected, rlam, nu));
            }
        }
        let (q, module, lam, nu) = out.last().unwrap();
        assert!(
            check_wreath(q, module, lam, nu).pass(),
            "generator produced a non-passing module"
        );
    }
    out
}

// Criterion 3: reflecting any relation-passing module at any loop-free
// window vertex yields a module passing the relations at (r_iλ, ν). Zero
// failures over ≥ 100 random instances, n ∈ {1,2}.
criterion!(criterion_3_relation_preservation, "3 (relation preservation)", || {
    let start = Instant::now();
    let instances = passing_modules(303, 100);
    let mut reflections = 0usize;
    for (q, module, lam, nu) in &instances {
        let mut vertices: BTreeSet<Vertex> = module.vertex_support();
        // Also reflect at neighbors of the support, where components appear
        // rather than disappear.
        for v in module.vertex_support() {
            vertices.extend(q.neighbors(v));
        }
        for &i in vertices.iter().take(4) {
            let out = reflect(q, module, lam, nu, i)
                .unwrap_or_else(|e| panic!("reflect failed at {i}: {e}"));
            let rlam = dual_reflection(q, i, lam);
            let report = check_wreath(q, &out, &rlam, nu);
            assert!(
                report.pass(),
                "relations fail after reflecting at {i}: {:?}",
                report.violations[0].site
            );
            reflections += 1;
        }
    }
    format!("{} modules, {reflections} reflections, {:?}", instances.len(), start.elapsed())
});

// Criterion 4: double reflection inside Λ_i reproduces the module up to a
// certified isomorphism (≥ 50 instances); outside Λ_i the equivalence is
// expected to break — the observed behavior is recorded and at least one
// genuine mismatch must occur over ≥ 10 violating instances.
criterion!(criterion_4_involution, "4 (involution)", || {
    let start = Instant::now();
    let instances = passing_modules(404, 120);
    let mut inside = 0usize;
    'outer: for (q, module, lam, nu) in &instances {
        if module.is_zero_module() {
            continue;
        }
        let mut vertices: BTreeSet<Vertex> = module.vertex_support();
        for v in module.vertex_support() {
            vertices.extend(q.neighbors(v));
        }
        for &i in &vertices {
            if !in_lambda_i(lam, nu, i, module.n()) {
                continue;
            }
            let once = reflect(q, module, lam, nu, i).unwrap();
            let rlam = dual_reflection(q, i, lam);
            let twice = reflect(q, &once, &rlam, nu, i).unwrap();
            assert!(
                module.same_dimension_data(&twice),
                "dimension data changed under F_{i}F_{i}"
            );
            let witness =
                is_isomorphic(q, module, &twice, lam, nu, 7001 + inside as u64).unwrap();
            let witness = witness.expect("no invertible intertwiner for double reflection");
            certify(&witness);
            inside += 1;
            if inside >= 50 {
                break 'outer;
            }
        }
    }
    assert!(inside >= 50, "only {inside} Λ_i instances exercised");

    // Violating instances: λ_i = pν for some p < n. The equivalence is not
    // asserted there; record what actually happens.
    let mut mismatches = 0usize;
    let mut observed = 0usize;
    let mut notes = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(405);
    while observed < 10 {
        let q = Quiver::a_plus_inf();
        if observed.is_multiple_of(2) {
            // p = 0 violation: λ_i = 0 with the point module at ε_i.
            let i = rng.gen_range(0..3i64);
            let lam = Weight::from_patch([(i + 1, rational(&mut rng, 3, 1))]);
            let module = WreathRep::from_rank1(&Rep::new([(i, 1usize)], []).unwrap());
            let nu = Scalar::zero();
            let once = reflect(&q, &module, &lam, &nu, i).unwrap();
            let rlam = dual_reflection(&q, i, &lam);
            let twice = reflect(&q, &once, &rlam, &nu, i).unwrap();
            let same = module.same_dimension_data(&twice);
            if !same {
                mismatches += 1;
            }
            notes.push(format!(
                "λ_{i}=0 point module: F²(V) dims {} V",
                if same { "equal" } else { "differ from" }
            ));
        } else {
            // p = 1 violation at n = 2: λ_i = ν on the zero-arrow module with
            // the sign diagram (which satisfies the relations there).
            let nu = nonzero_rational(&mut rng, 3, 2);
            let i = rng.gen_range(0..3i64);
            let lam = Weight::from_patch([(i, nu.clone())]);
            let diagram = YoungDiagram::new(vec![1, 1]).unwrap();
            let y = Rep::new([(i, 1usize)], []).unwrap();
            let module =
                outer_tensor_induce(&q, &[2], &[diagram], &[y], &Weight::zero()).unwrap();
            assert!(check_wreath(&q, &module, &lam, &nu).pass());
            assert!(!in_lambda_i(&lam, &nu, i, 2));
            let once = reflect(&q, &module, &lam, &nu, i).unwrap();
            let rlam = dual_reflection(&q, i, &lam);
            let twice = reflect(&q, &once, &rlam, &nu, i).unwrap();
            let same_dims = module.same_dimension_data(&twice);
            let iso = same_dims
                && is_isomorphic(&q, &module, &twice, &lam, &nu, 999 + observed as u64)
                    .unwrap()
                    .is_some();
            if !iso {
                mismatches += 1;
            }
            notes.push(format!(
                "λ_{i}=ν sign-diagram module: F²(V) {} V",
                if iso { "isomorphic to" } else { "not equivalent to" }
            ));
        }
        observed += 1;
    }
    for note in &notes {
        println!("  observed outside Λ_i: {note}");
    }
    assert!(
        mismatches >= 1,
        "expected at least one failure outside Λ_i, saw none in {observed} instances"
    );
    format!(
        "{inside} Λ_i instances isomorphic, {mismatches}/{observed} violations broke, {:?}",
        start.elapsed()
    )
});

// Criterion 5: every oracle-constructed simple at a root α with λ_i ≠ 0 and
// α ≠ ε_i reflects to the dimension vector s_i(α), on windows of size ≤ 6.
criterion!(criterion_5_rank1_covariance, "5 (rank-1 covariance)", || {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut checked = 0usize;
    for _ in 0..60 {
        for q in families() {
            let size = rng.gen_range(2..=6usize);
            let lo = match q.family() {
                Family::AInf => rng.gen_range(-4..=0i64),
                _ => 0,
            };
            let window: Vec<Vertex> = (lo..lo + size as i64).collect();
            let lam = random_weight(&mut rng, &window, false);
            let win = q.window(window.iter().copied()).unwrap();
            for alpha in enumerate_positive_roots(&q, &win).unwrap() {
                if !alpha.is_multiplicity_free() {
                    continue;
                }
                let Some(rep) = oracle_simple(&q, &lam, &alpha).unwrap() else {
                    continue;
                };
                let module = WreathRep::from_rank1(&rep);
                let mut vertices: BTreeSet<Vertex> = window.iter().copied().collect();
                for &v in &window {
                    vertices.extend(q.neighbors(v));
                }
                for &i in &vertices {
                    if lam.at(i).is_zero() || alpha == DimVec::unit(i) {
                        continue;
                    }
                    let out = reflect(&q, &module, &lam, &Scalar::zero(), i).unwrap();
                    let got = DimVec::from_entries(
                        out.components().iter().map(|(t, &d)| (t.get(0), d as i64)),
                    );
                    let expect = simple_reflection(&q, i, &alpha);
                    assert_eq!(got, expect, "covariance fails at vertex {i} for {alpha:?}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 100, "only {checked} covariance checks exercised");
    format!("{checked} reflections matched s_i(α), {:?}", start.elapsed())
});

// Criterion 6: sweep over partitions of n ≤ 4, all diagram tuples, all
// ordered tuples of distinct window vertices, 20 (λ,ν) draws each: the
// zero-arrow module satisfies the defining relations iff the three extension
// conditions hold. On non-adjacent tuples relation (I) alone already decides.
// Under 60 seconds.
criterion!(criterion_6_extension_equivalence, "6 (extension equivalence)", || {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let partitions: Vec<Vec<usize>> = vec![
        vec![1],
        vec![2],
        vec![1, 1],
        vec![3],
        vec![2, 1],
        vec![1, 1, 1],
        vec![4],
        vec![3, 1],
        vec![2, 2],
        vec![2, 1, 1],
        vec![1, 1, 1, 1],
    ];
    let windows: Vec<(Quiver, Vec<Vertex>)> = vec![
        (Quiver::a_plus_inf(), (0..4).collect()),
        (Quiver::d_inf(), (0..4).collect()),
        (Quiver::a_inf(), (-2..2).collect()),
    ];
    fn ordered_tuples(verts: &[Vertex], r: usize) -> Vec<Vec<Vertex>> {
        if r == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in ordered_tuples(verts, r - 1) {
            for &v in verts {
                if !rest.contains(&v) {
                    let mut next = rest.clone();
                    next.push(v);
                    out.push(next);
                }
            }
        }
        out
    }
    fn diagram_tuples(parts: &[usize]) -> Vec<Vec<YoungDiagram>> {
        let mut out: Vec<Vec<YoungDiagram>> = vec![vec![]];
        for &p in parts {
            let choices = YoungDiagram::all_of_size(p);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |d| {
                        let mut next = prefix.clone();
                        next.push(d.clone());
                        next
                    })
                })
                .collect();
        }
        out
    }
    let mut configs = 0usize;
    let mut draws = 0usize;
    let mut condition_passes = 0usize;
    for (q, window) in &windows {
        for partition in &partitions {
            let r = partition.len();
            for diagrams in diagram_tuples(partition) {
                let shapes: Vec<Option<(usize, usize)>> =
                    diagrams.iter().map(|d| d.is_rectangular()).collect();
                for vertices in ordered_tuples(window, r) {
                    configs += 1;
                    // Build the zero-arrow module once per configuration.
                    let reps: Vec<Rep> = vertices
                        .iter()
                        .map(|&v| Rep::new([(v, 1usize)], []).unwrap())
                        .collect();
                    let module =
                        outer_tensor_induce(q, partition, &diagrams, &reps, &Weight::zero())
                            .unwrap();
                    let non_adjacent = vertices.iter().enumerate().all(|(a, &x)| {
                        vertices[a + 1..].iter().all(|&y| {
                            symmetrized_form(q, &DimVec::unit(x), &DimVec::unit(y)) == 0
                        })
                    });
                    for draw in 0..20 {
                        let nu = nonzero_rational(&mut rng, 3, 2);
                        let mut noise = Vec::new();
                        for &v in window.iter() {
                            if rng.gen_bool(0.3) {
                                noise.push((v, rational(&mut rng, 2, 2)));
                            }
                        }
                        let mut lam = Weight::from_patch(noise);
                        match draw % 3 {
                            0 => {
                                // Engineered pass: λ_{i_l} = ν(a_l − b_l).
                                for (l, &v) in vertices.iter().enumerate() {
                                    if let Some((a, b)) = shapes[l] {
                                        lam.set(v, &Scalar::from_int(a as i64 - b as i64) * &nu);
                                    }
                                }
                            }
                            1 => {
                                // Engineered, then one condition broken.
                                for (l, &v) in vertices.iter().enumerate() {
                                    if let Some((a, b)) = shapes[l] {
                                        lam.set(v, &Scalar::from_int(a as i64 - b as i64) * &nu);
                                    }
                                }
                                let v = vertices[rng.gen_range(0..vertices.len())];
                                let bump = nonzero_rational(&mut rng, 2, 1);
                                lam.set(v, &lam.at(v) + &bump);
                            }
                            _ => {}
                        }
                        draws += 1;
                        let verdict = check_extension_conditions(
                            q,
                            partition,
                            &diagrams,
                            &InductionTargets::Vertices(vertices.clone()),
                            &lam,
                            &nu,
                        )
                        .unwrap();
                        let direct = check_wreath(q, &module, &lam, &nu).pass();
                        assert_eq!(
                            verdict.pass, direct,
                            "mismatch: partition {partition:?}, diagrams {diagrams:?}, \
                             vertices {vertices:?}, draw {draw}"
                        );
                        condition_passes += verdict.pass as usize;
                        if non_adjacent {
                            let rel_i = check_wreath_relation_i(q, &module, &lam, &nu).pass();
                            assert_eq!(verdict.pass, rel_i, "relation (I) route disagrees");
                        }
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within("6", elapsed, Duration::from_secs(60));
    format!("{configs} configurations, {draws} draws, {condition_passes} passes, {elapsed:?}")
});

// Criterion 7: dominance reduction terminates on random Gaussian-rational
// weights, its output is weakly dominant, replaying the word reproduces the
// output and the reversed word recovers the input. ≥ 500 weights, |J| ≤ 6.
criterion!(criterion_7_dominance, "7 (dominance)", || {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut tested = 0usize;
    let mut max_len = 0usize;
    while tested < 500 {
        for q in families() {
            let size = rng.gen_range(1..=6usize);
            let lo = match q.family() {
                Family::AInf => rng.gen_range(-4..=0i64),
                _ => rng.gen_range(0..=2i64),
            };
            let mut window: Vec<Vertex> = (lo..lo + size as i64).collect();
            if rng.gen_bool(0.25) && size >= 3 {
                // Disconnected J: drop a middle vertex.
                window.remove(size / 2);
            }
            let lam = random_weight(&mut rng, &window, true);
            let (dominant, word) = dominate(&q, &lam, &window).unwrap();
            let zero = Scalar::zero();
            for &v in &window {
                assert!(
                    !dominant.at(v).precedes(&zero),
                    "output not weakly dominant at {v}"
                );
            }
            let mut check_on: Vec<Vertex> = window.clone();
            for &v in &window {
                check_on.extend(q.neighbors(v));
            }
            check_on.sort();
            check_on.dedup();
            assert!(word.apply_to_weight(&q, &lam).eq_on(&dominant, &check_on));
            assert!(word.reversed().apply_to_weight(&q, &dominant).eq_on(&lam, &check_on));
            max_len = max_len.max(word.len());
            tested += 1;
        }
    }
    format!("{tested} weights, longest word {max_len}, {:?}", start.elapsed())
});

// Criterion 8: Cartan blocks match the family matrices on windows up to size
// 8 with positive leading minors; p = 0 on every enumerated root; the δ
// vector satisfies the interior kernel equations up to length 12.
criterion!(criterion_8_root_cartan, "8 (root/Cartan consistency)", || {
    let start = Instant::now();
    // Expected Cartan blocks straight from the displayed family matrices.
    let expected_entry = |q: &Quiver, u: Vertex, v: Vertex| -> i64 {
        match q.family() {
            Family::AInf | Family::APlusInf => {
                if u == v {
                    2
                } else if (u - v).abs() == 1 {
                    -1
                } else {
                    0
                }
            }
            Family::DInf => {
                if u == v {
                    2
                } else {
                    match (u.min(v), u.max(v)) {
                        (0, 1) => 0,
                        (0, 2) | (1, 2) => -1,
                        (a, b) if a >= 2 && b == a + 1 => -1,
                        _ => 0,
                    }
                }
            }
            Family::Explicit(_) => unreachable!(),
        }
    };
    for q in families() {
        for size in 1..=8usize {
            let verts = q.canonical_vertices(size);
            let win = q.window(verts.iter().copied()).unwrap();
            let sorted = win.vertices();
            let m = preproj_core::forms::window_cartan_matrix(&q, &win);
            for (i, &u) in sorted.iter().enumerate() {
                for (j, &v) in sorted.iter().enumerate() {
                    assert_eq!(
                        m[(i, j)],
                        Scalar::from_int(expected_entry(&q, u, v)),
                        "Cartan entry ({u},{v}) for {:?}",
                        q.family()
                    );
                    assert_eq!(
                        symmetrized_form(&q, &DimVec::unit(u), &DimVec::unit(v)),
                        expected_entry(&q, u, v)
                    );
                }
            }
            for minor in preproj_core::forms::leading_principal_minors(&m) {
                assert!(
                    Scalar::zero().precedes(&minor),
                    "non-positive principal minor in {:?} window of size {size}",
                    q.family()
                );
            }
        }
        // p vanishes on every root of every window of size ≤ 6.
        for size in 1..=6usize {
            let win = q.window(q.canonical_vertices(size)).unwrap();
            for root in enumerate_positive_roots(&q, &win).unwrap() {
                assert_eq!(p_value(&q, &root), 0, "p(α) ≠ 0 for {root:?}");
            }
        }
        // Interior kernel equations for δ up to length 12.
        let k = 12;
        let verts = q.canonical_vertices(k);
        let delta = delta_prefix(&q, k).unwrap();
        let value = |v: Vertex| verts.iter().position(|&u| u == v).map(|p| delta[p]);
        let mut interior_rows = 0usize;
        for (pos, &v) in verts.iter().enumerate() {
            let Some(neighbor_vals) = q
                .neighbors(v)
                .into_iter()
                .map(value)
                .collect::<Option<Vec<i64>>>()
            else {
                continue;
            };
            assert_eq!(
                2 * delta[pos],
                neighbor_vals.iter().sum::<i64>(),
                "kernel equation fails at {v} for {:?}",
                q.family()
            );
            interior_rows += 1;
        }
        assert!(interior_rows >= k - 2);
    }
    format!("windows ≤ 8, roots ≤ 6, δ ≤ 12, {:?}", start.elapsed())
});
