//! Worked examples reproduced exactly, one PASS/FAIL line each.

use std::io::Write;

use pathsig::analysis::{
    level_l1_norm, path_length_l1, random_path, trial_rng, vanish_search, vanishing_report,
    SearchParams,
};
use pathsig::cumulants::{
    brownian_expected_signature, concat_brownian_cumulant, gaussian_cumulant, matrix_tensor,
    GaussianSpec, SymSeries,
};
use pathsig::io::to_json;
use pathsig::lie::{
    bch, bch_iterated, bracket, is_lie_series, tensor_to_lyndon, LiePolynomial, LyndonWord,
};
use pathsig::path::{
    pure_rough_signature, signature_numeric_oracle, PiecewiseLinearPath, SampledPath,
};
use pathsig::scalar::factorial;
use pathsig::{rat, Rational, Scalar, TensorSeries, Word};

type T = TensorSeries<Rational>;
type Path = PiecewiseLinearPath<Rational>;
type Outcome = Result<(), String>;
type Check = (&'static str, fn() -> Outcome);

fn q(n: i64) -> Rational {
    rat(n, 1)
}

fn e(i: u16, level: usize) -> T {
    T::letter(2, level, i).expect("letter in range")
}

fn path(pieces: &[&[Rational]]) -> Path {
    let dim = pieces.first().map_or(2, |p| p.len());
    Path::new(dim, pieces.iter().map(|p| p.to_vec()).collect()).expect("well-formed pieces")
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn same<X: PartialEq + std::fmt::Debug>(got: X, want: X) -> Outcome {
    ensure(got == want, || format!("got {got:?}, want {want:?}"))
}

fn err(e: pathsig::Error) -> String {
    e.to_string()
}

fn three_piece(a: Rational) -> Path {
    path(&[&[q(1), q(1)], &[q(1), q(-1)], &[a, q(1)]])
}

/// Fixed paths plus seeded random ones, `d = 2`.
fn corpus() -> Vec<Path> {
    let mut out = vec![
        path(&[&[q(1), q(0)], &[q(0), q(1)]]),
        path(&[&[q(1), q(1)]]),
        path(&[&[rat(1, 2), q(-2)], &[q(3), rat(1, 3)], &[q(-1), q(-1)]]),
        three_piece(q(5)),
    ];
    for i in 0..12 {
        let mut rng = trial_rng(0, i);
        out.push(random_path(&mut rng, 1 + (i as usize % 4), 2));
    }
    out
}

fn exp_of_letter() -> Outcome {
    let want = T::from_terms(
        2,
        2,
        [
            (Word::empty(), q(1)),
            (Word::letter(1), q(1)),
            (Word::from([1, 1]), rat(1, 2)),
        ],
    )
    .map_err(err)?;
    same(e(1, 2).exp().map_err(err)?, want)
}

fn bch_level_two() -> Outcome {
    let s = e(1, 2)
        .exp()
        .and_then(|a| a.mul(&e(2, 2).exp()?))
        .and_then(|s| s.log())
        .map_err(err)?;
    let want = T::from_terms(
        2,
        2,
        [
            (Word::from([1, 2]), rat(1, 2)),
            (Word::from([2, 1]), rat(-1, 2)),
        ],
    )
    .map_err(err)?;
    same(s.project(2), want)
}

fn signatures_are_grouplike() -> Outcome {
    for (i, p) in corpus().iter().enumerate() {
        ensure(p.signature(5).is_grouplike(), || format!("corpus path {i}"))?;
    }
    Ok(())
}

fn lyndon(pairs: &[(&str, Rational)], level: usize) -> Result<LiePolynomial, String> {
    let terms = pairs
        .iter()
        .map(|(w, c)| Ok((LyndonWord::parse(w).map_err(err)?, c.clone())))
        .collect::<Result<Vec<_>, String>>()?;
    LiePolynomial::from_terms(2, level, terms).map_err(err)
}

fn two_piece_tensor_to_lyndon() -> Outcome {
    let t = path(&[&[q(1), q(0)], &[q(0), q(1)]]).log_signature_tensor(2);
    let want = lyndon(&[("1", q(1)), ("2", q(1)), ("1,2", rat(1, 2))], 2)?;
    same(tensor_to_lyndon(&t).map_err(err)?, want)
}

fn log_signature_is_lie() -> Outcome {
    for i in 0..5 {
        let p = random_path(&mut trial_rng(1, i), 3, 2);
        ensure(is_lie_series(&p.log_signature_tensor(6)), || {
            format!("sample {i}")
        })?;
    }
    Ok(())
}

fn bch_level_three() -> Outcome {
    let got = bch(&e(1, 3), &e(2, 3)).map_err(err)?;
    let want = lyndon(
        &[
            ("1", q(1)),
            ("2", q(1)),
            ("1,2", rat(1, 2)),
            ("1,1,2", rat(1, 12)),
            ("1,2,2", rat(1, 12)),
        ],
        3,
    )?;
    same(tensor_to_lyndon(&got).map_err(err)?, want.clone())?;
    // Independent of the Lyndon signs: expand the bracket form directly.
    let (a, b) = (e(1, 3), e(2, 3));
    let ab = bracket(&a, &b).map_err(err)?;
    let ba = bracket(&b, &a).map_err(err)?;
    let cubic = bracket(&a, &ab)
        .and_then(|x| x.add(&bracket(&b, &ba)?))
        .map_err(err)?;
    let series = a
        .add(&b)
        .and_then(|s| s.add(&ab.scale(&rat(1, 2))))
        .and_then(|s| s.add(&cubic.scale(&rat(1, 12))));
    same(got, series.map_err(err)?)
}

fn bch_collinear() -> Outcome {
    let a = T::from_vector(6, &[rat(2, 3), q(-1)]);
    let b = a.scale(&q(3));
    same(bch(&a, &b).map_err(err)?, a.add(&b).map_err(err)?)
}

fn bch_single_vector() -> Outcome {
    same(
        bch_iterated(&[vec![q(1), q(0)]], 4).map_err(err)?,
        lyndon(&[("1", q(1))], 4)?,
    )
}

fn bch_collinear_vectors() -> Outcome {
    let v = [q(1), rat(-1, 2)];
    let vs: Vec<Vec<Rational>> = [2, -1, 7]
        .iter()
        .map(|&k| v.iter().map(|x| x * q(k)).collect())
        .collect();
    let sum: Vec<Rational> = v.iter().map(|x| x * q(8)).collect();
    same(
        bch_iterated(&vs, 5).map_err(err)?,
        LiePolynomial::from_vector(5, &sum),
    )
}

fn straight_line_signature() -> Outcome {
    let a = [rat(3, 2), q(-2)];
    same(
        path(&[&a]).signature(6),
        T::from_vector(6, &a).exp().map_err(err)?,
    )
}

fn empty_path_signature() -> Outcome {
    same(Path::empty(3).signature(5), TensorSeries::one(3, 5))
}

fn straight_line_log_signature() -> Outcome {
    let a = [rat(3, 2), q(-2)];
    let l = path(&[&a]).log_signature(6).map_err(err)?;
    same(l.degree(), Some(1))?;
    same(l, LiePolynomial::from_vector(6, &a))
}

fn two_piece_log_signature() -> Outcome {
    let l = path(&[&[q(1), q(0)], &[q(0), q(1)]])
        .log_signature(2)
        .map_err(err)?;
    same(
        to_json(&l),
        r#"{"dim":2,"level":2,"coeffs":{"1":"1","2":"1","1,2":"1/2"}}"#.to_string(),
    )
}

fn level_two_antisymmetric() -> Outcome {
    for (n, p) in corpus().iter().enumerate() {
        let l = p.log_signature_tensor(2);
        for i in 1..=2u16 {
            for j in 1..=2u16 {
                let (ij, ji) = (l.coeff(&Word::from([i, j])), l.coeff(&Word::from([j, i])));
                ensure(ij == -ji, || format!("corpus path {n}, entry ({i},{j})"))?;
            }
        }
    }
    Ok(())
}

fn three_piece_is_reduced() -> Outcome {
    ensure(three_piece(q(5)).is_reduced(), || {
        "is_reduced returned false".into()
    })
}

fn level_two_closed_form() -> Outcome {
    let got = path(&[&[q(1), q(0)], &[q(0), q(1)]]).level2_closed_form();
    let want = T::from_terms(
        2,
        2,
        [
            (Word::from([1, 2]), rat(1, 2)),
            (Word::from([2, 1]), rat(-1, 2)),
        ],
    )
    .map_err(err)?;
    same(got, want)
}

fn three_piece_family_vanishes() -> Outcome {
    for a in [q(-2), q(-1), q(0), rat(1, 3), q(5)] {
        let p = three_piece(a.clone());
        ensure(p.level2_closed_form().is_zero(), || {
            format!("closed form at a = {a}")
        })?;
        ensure(p.log_signature_tensor(2).is_level_zero(2), || {
            format!("log-signature at a = {a}")
        })?;
    }
    Ok(())
}

fn level_three_constraint() -> Outcome {
    for (v1, v2) in [
        ([q(1), q(2)], [q(-1), rat(1, 2)]),
        ([rat(2, 3), q(0)], [q(1), q(1)]),
    ] {
        let v3: Vec<Rational> = (0..2)
            .map(|i| -v1[i].clone() - q(3) * v2[i].clone())
            .collect();
        let p = path(&[&v1, &v2, &v3]);
        ensure(p.level3_closed_form().is_zero(), || {
            format!("closed form for {v1:?}, {v2:?}")
        })?;
        ensure(p.log_signature_tensor(3).is_level_zero(3), || {
            format!("log-signature for {v1:?}, {v2:?}")
        })?;
    }
    Ok(())
}

fn euler_error(p: &Path, level: usize, steps: usize) -> Result<f64, String> {
    let exact = p.signature(level).map_coeffs(|c| c.to_f64());
    let approx =
        signature_numeric_oracle(&SampledPath::from_piecewise(p), level, steps).map_err(err)?;
    Ok(approx.sub(&exact).map_err(err)?.max_abs())
}

fn euler_straight_line() -> Outcome {
    let error = euler_error(&path(&[&[q(1), rat(-1, 2)]]), 4, 10_000)?;
    ensure(error < 1e-3, || format!("max error {error:e}"))
}

fn euler_convergence() -> Outcome {
    let p = path(&[&[q(1), q(0)], &[q(0), q(1)]]);
    let (e1, e2) = (euler_error(&p, 4, 10_000)?, euler_error(&p, 4, 20_000)?);
    ensure(e1 <= 1e-3, || format!("max error {e1:e} at 10^4 steps"))?;
    let ratio = e1 / e2;
    ensure((1.6..=2.4).contains(&ratio), || {
        format!("contraction {ratio}")
    })
}

fn pure_area() -> Outcome {
    let l = lyndon(&[("1,2", q(1))], 4)?;
    let s = pure_rough_signature(&l, 4).map_err(err)?;
    ensure(s.is_level_zero(1), || "level 1 is nonzero".into())?;
    same(
        s.project(2),
        bracket(&e(1, 4), &e(2, 4)).map_err(err)?.project(2),
    )
}

fn straight_line_report() -> Outcome {
    let r = vanishing_report(&path(&[&[q(2), q(-3)]]), 2, 8).map_err(err)?;
    same(
        r.zero_levels.into_iter().collect::<Vec<_>>(),
        (2..=8).collect(),
    )
}

fn two_piece_report() -> Outcome {
    let r = vanishing_report(&path(&[&[q(1), q(2)], &[q(-1), rat(1, 2)]]), 2, 3).map_err(err)?;
    same(r.nonzero_levels.into_iter().collect::<Vec<_>>(), vec![2, 3])
}

fn three_piece_report() -> Outcome {
    let r = vanishing_report(&three_piece(q(5)), 2, 2).map_err(err)?;
    same(r.zero_levels.into_iter().collect::<Vec<_>>(), vec![2])
}

fn search(
    n1: usize,
    pieces: usize,
    max_level: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<usize>, String> {
    let params = SearchParams {
        n1,
        pieces,
        dim: 2,
        max_level,
        trials,
        seed,
    };
    Ok(vanish_search(&params).map_err(err)?.zero_run_levels())
}

fn search_two_pieces() -> Outcome {
    same(search(2, 2, 3, 200, 0)?, vec![])
}

fn search_three_pieces() -> Outcome {
    same(search(2, 3, 3, 1000, 7)?, vec![2])
}

fn search_level_three() -> Outcome {
    let run = search(3, 3, 3, 200, 0)?;
    ensure(run == [3], || format!("zero run {run:?}"))
}

fn l1_bound() -> Outcome {
    for (i, p) in corpus().iter().enumerate() {
        let sig = p.signature(8);
        let length = path_length_l1(p).to_f64();
        for k in 1..=8 {
            let v = (factorial::<Rational>(k) * level_l1_norm(&sig, k))
                .to_f64()
                .powf(1.0 / k as f64);
            ensure(v <= length + 1e-9, || {
                format!("corpus path {i}, level {k}: {v} > {length}")
            })?;
        }
    }
    Ok(())
}

fn sym(d: usize, terms: &[(&[u16], Rational)]) -> Result<SymSeries, String> {
    SymSeries::from_terms(d, 2, terms.iter().map(|(w, c)| (Word::from(*w), c.clone()))).map_err(err)
}

fn identity(d: usize) -> Vec<Vec<Rational>> {
    (0..d)
        .map(|i| (0..d).map(|j| q((i == j) as i64)).collect())
        .collect()
}

fn standard_normal_cumulant() -> Outcome {
    let g = GaussianSpec::new(vec![q(0), q(0)], identity(2)).map_err(err)?;
    same(
        gaussian_cumulant(&g, 2),
        sym(2, &[(&[1, 1], rat(1, 2)), (&[2, 2], rat(1, 2))])?,
    )
}

fn one_dimensional_cumulant() -> Outcome {
    let s2 = rat(7, 3);
    let g = GaussianSpec::new(vec![q(0)], vec![vec![s2.clone()]]).map_err(err)?;
    same(gaussian_cumulant(&g, 2), sym(1, &[(&[1, 1], s2 / q(2))])?)
}

fn brownian_standard() -> Outcome {
    let s = brownian_expected_signature(&[q(0), q(0)], &identity(2), 2).map_err(err)?;
    let want = T::from_terms(
        2,
        2,
        [
            (Word::empty(), q(1)),
            (Word::from([1, 1]), rat(1, 2)),
            (Word::from([2, 2]), rat(1, 2)),
        ],
    )
    .map_err(err)?;
    same(s, want)
}

fn brownian_log() -> Outcome {
    let b = [rat(1, 2), q(-1)];
    let a = vec![vec![q(2), rat(1, 3)], vec![rat(1, 3), q(1)]];
    let s = brownian_expected_signature(&b, &a, 5).map_err(err)?;
    let want = T::from_vector(5, &b)
        .add(&matrix_tensor(&a, 5).scale(&rat(1, 2)))
        .map_err(err)?;
    same(s.log().map_err(err)?, want)
}

fn concat_collinear() -> Outcome {
    let a1 = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
    let a2: Vec<Vec<Rational>> = a1
        .iter()
        .map(|r| r.iter().map(|x| x * rat(5, 2)).collect())
        .collect();
    let k = concat_brownian_cumulant(&a1, &a2, 6).map_err(err)?;
    let want = matrix_tensor(&a1, 6)
        .add(&matrix_tensor(&a2, 6))
        .map_err(err)?
        .scale(&rat(1, 2));
    same(k, want)
}

fn concat_level_four() -> Outcome {
    let a1 = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
    let a2 = vec![vec![q(1), q(0)], vec![q(0), q(-1)]];
    let k = concat_brownian_cumulant(&a1, &a2, 4).map_err(err)?;
    let c = bracket(&matrix_tensor(&a1, 4), &matrix_tensor(&a2, 4)).map_err(err)?;
    ensure(!c.is_zero(), || "test matrices commute".into())?;
    same(k.project(4), c.scale(&rat(1, 8)))
}

const CHECKS: &[Check] = &[
    ("tensor/exp-of-letter", exp_of_letter),
    ("tensor/bch-level-two", bch_level_two),
    ("tensor/signatures-are-grouplike", signatures_are_grouplike),
    ("lie/two-piece-tensor-to-lyndon", two_piece_tensor_to_lyndon),
    ("lie/log-signature-is-lie", log_signature_is_lie),
    ("bch/level-three-series", bch_level_three),
    ("bch/collinear-arguments-add", bch_collinear),
    ("bch/single-vector", bch_single_vector),
    ("bch/collinear-vectors", bch_collinear_vectors),
    ("path/straight-line-signature", straight_line_signature),
    ("path/empty-path-signature", empty_path_signature),
    (
        "path/straight-line-log-signature",
        straight_line_log_signature,
    ),
    ("path/two-piece-log-signature", two_piece_log_signature),
    ("path/level-two-antisymmetric", level_two_antisymmetric),
    ("path/three-piece-family-is-reduced", three_piece_is_reduced),
    ("path/level-two-closed-form", level_two_closed_form),
    (
        "path/three-piece-family-vanishes",
        three_piece_family_vanishes,
    ),
    (
        "path/level-three-constraint-vanishes",
        level_three_constraint,
    ),
    ("path/euler-oracle-straight-line", euler_straight_line),
    ("path/euler-oracle-convergence", euler_convergence),
    ("path/pure-area-signature", pure_area),
    ("vanishing/straight-line", straight_line_report),
    ("vanishing/two-non-collinear-pieces", two_piece_report),
    ("vanishing/three-piece-level-two", three_piece_report),
    (
        "search/two-pieces-level-two-never-vanishes",
        search_two_pieces,
    ),
    ("search/three-pieces-level-two-only", search_three_pieces),
    ("search/three-pieces-level-three", search_level_three),
    ("profile/l1-bound", l1_bound),
    ("cumulants/standard-normal", standard_normal_cumulant),
    ("cumulants/one-dimensional", one_dimensional_cumulant),
    ("cumulants/brownian-standard", brownian_standard),
    ("cumulants/brownian-log", brownian_log),
    ("cumulants/concat-collinear", concat_collinear),
    ("cumulants/concat-level-four", concat_level_four),
];

/// Runs every check, returning the name of the first failure.
pub fn run(out: &mut impl Write) -> Option<&'static str> {
    run_checks(CHECKS, out)
}

fn run_checks(checks: &[Check], out: &mut impl Write) -> Option<&'static str> {
    let mut first = None;
    let mut failed = 0;
    for (name, check) in checks {
        match check() {
            Ok(()) => {
                let _ = writeln!(out, "PASS {name}");
            }
            Err(why) => {
                let _ = writeln!(out, "FAIL {name}: {why}");
                first.get_or_insert(*name);
                failed += 1;
            }
        }
    }
    let _ = writeln!(out, "{} passed, {failed} failed", checks.len() - failed);
    first
}
