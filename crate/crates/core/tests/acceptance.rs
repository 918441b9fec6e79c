//! Acceptance run: one PASS/FAIL line per criterion, with the wall-clock
//! limits pinned below. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use toricube::cone::{cone_equal, Cone};
use toricube::cw::{build_cw, characteristic_domain, regularity_report, CWComplex};
use toricube::exactnum::IntVec;
use toricube::oracle::{check_map, check_sample, grid_image, random_map, rng_from_env};
use toricube::toric::{
    cubify, implicitize, is_cube, log_cone_of_map, parametrize, system_equiv, BinomialInequality,
    BinomialSystem, MonomialMap, Support, ToricCube,
};

const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const QUADRILATERAL_LIMIT: Duration = Duration::from_secs(5);
const PROPERTY_LIMIT: Duration = Duration::from_secs(300);

const PROPERTY_MAPS: usize = 100;
const PROPERTY_RES: u32 = 4;
const PARTITION_SAMPLES: usize = 1000;

/// Maximal chains the criterion text asks for in the quadrilateral example.
const STATED_CHAIN_COUNT: usize = 4;

struct Line {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Line {
    fn new() -> Self {
        Line {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce(&mut Line)) -> bool {
    let mut line = Line::new();
    let start = Instant::now();
    body(&mut line);
    let elapsed = start.elapsed();
    line.check(
        elapsed < limit,
        format!(
            "took {:.2}s, limit {}s",
            elapsed.as_secs_f64(),
            limit.as_secs()
        ),
    );
    let pass = line.failures.is_empty();
    let mut detail = line.failures.join("; ");
    if !line.notes.is_empty() {
        if !detail.is_empty() {
            detail.push_str("; ");
        }
        detail.push_str(&line.notes.join("; "));
    }
    println!(
        "criterion {id} [{}] {title} ({:.2}s < {}s){}{}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs(),
        if detail.is_empty() { "" } else { ": " },
        detail
    );
    pass
}

fn map(rows: &[&[i64]]) -> MonomialMap {
    MonomialMap::from_i64_rows(rows[0].len(), rows).unwrap()
}

fn ineq(u: &[i64], v: &[i64]) -> BinomialInequality {
    BinomialInequality::from_i64s(u, v).unwrap()
}

fn system(n: usize, ineqs: Vec<BinomialInequality>) -> BinomialSystem {
    BinomialSystem::new(n, ineqs).unwrap()
}

fn vecs(rows: &[&[i64]]) -> BTreeSet<IntVec> {
    rows.iter().map(|r| IntVec::from_i64s(r)).collect()
}

fn cell_id(x: &CWComplex, support: &[usize], rays: &[&[i64]]) -> Option<usize> {
    let target = if rays.is_empty() {
        Cone::zero(support.len())
    } else {
        let gens: Vec<IntVec> = rays.iter().map(|r| IntVec::from_i64s(r)).collect();
        Cone::from_rays(support.len(), &gens).unwrap()
    };
    let support = Support::from_indices(support);
    x.cells()
        .iter()
        .find(|c| c.support == support && cone_equal(&c.cone, &target).unwrap())
        .map(|c| c.id)
}

fn pairwise() -> MonomialMap {
    map(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
}

fn criterion_1(l: &mut Line) {
    let s = implicitize(&pairwise()).unwrap();
    // bc <= a, ac <= b, ab <= c
    let expected = system(
        3,
        vec![
            ineq(&[0, 1, 1], &[1, 0, 0]),
            ineq(&[1, 0, 1], &[0, 1, 0]),
            ineq(&[1, 1, 0], &[0, 0, 1]),
        ],
    );
    l.check(
        system_equiv(&s, &expected).unwrap(),
        "implicitization differs",
    );
}

fn criterion_2(l: &mut Line) {
    // bd <= ac, ad <= bc
    let s = system(
        4,
        vec![
            ineq(&[0, 1, 0, 1], &[1, 0, 1, 0]),
            ineq(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        ],
    );
    l.check(!is_cube(&s).unwrap(), "(a) is-cube returned true");
    let expected = system(
        4,
        vec![
            ineq(&[0, 1, 0, 1], &[1, 0, 1, 0]),
            ineq(&[1, 0, 0, 1], &[0, 1, 1, 0]),
            ineq(&[0, 0, 0, 1], &[0, 0, 1, 0]),
        ],
    );
    l.check(
        system_equiv(&cubify(&s).unwrap(), &expected).unwrap(),
        "(b) cubify differs",
    );
    let rays = vecs(&[
        &[1, 1, 0, 0],
        &[1, 0, 0, 1],
        &[0, 1, 0, 1],
        &[0, 0, 1, 1],
        &[0, 0, 0, 1],
    ]);
    let cube = ToricCube::from_system(&s).unwrap();
    let found: BTreeSet<IntVec> = cube.log_cone().rays().iter().cloned().collect();
    l.check(found == rays, "(c) extreme rays differ");
    // (t1t2, t1t3, t4, t2t3t4t5): one column per parameter.
    let m = parametrize(&s);
    let mut cols: Vec<IntVec> = m.columns();
    cols.sort();
    let mut expected_cols: Vec<IntVec> = rays.into_iter().collect();
    expected_cols.sort();
    l.check(
        m.n() == 4 && m.d() == 5 && cols == expected_cols,
        "(d) exponent matrix differs",
    );
}

fn criterion_3(l: &mut Line) {
    let x = build_cw(&ToricCube::from_map(&pairwise()).unwrap());
    l.check(x.len() == 15, format!("{} cells", x.len()));
    l.check(
        x.f_vector() == vec![5, 6, 3, 1],
        format!("f-vector {:?}", x.f_vector()),
    );
    l.check(x.euler() == 1, format!("euler {}", x.euler()));
    let full = [0, 1, 2];
    let ids = (
        cell_id(&x, &full, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
        cell_id(&x, &full, &[&[1, 1, 0], &[1, 0, 1]]),
        cell_id(&x, &full, &[&[1, 1, 0], &[0, 1, 1]]),
        cell_id(&x, &full, &[&[1, 0, 1], &[0, 1, 1]]),
        cell_id(&x, &full, &[&[1, 0, 1]]),
        cell_id(&x, &full, &[&[0, 1, 1]]),
        cell_id(&x, &[0], &[&[1]]),
        cell_id(&x, &[1], &[&[1]]),
    );
    let (Some(c15), Some(c12), Some(c13), Some(c14), Some(c10), Some(c11), Some(c6), Some(c7)) =
        ids
    else {
        l.check(false, "expected cells missing");
        return;
    };
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    l.check(
        x.covers(c15) == sorted(vec![c12, c13, c14]),
        "covers of the 3-cell differ",
    );
    l.check(
        x.covers(c14) == sorted(vec![c6, c7, c10, c11]),
        "covers of (x, y, xy) differ",
    );
}

fn criterion_4(l: &mut Line) {
    let m = map(&[&[1, 1, 0, 1], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
    let cone = log_cone_of_map(&m);
    let d = characteristic_domain(&cone, false).unwrap();
    let nine = vecs(&[
        &[3, 2, 2],
        &[2, 1, 0],
        &[1, 2, 1],
        &[1, 1, 2],
        &[2, 0, 1],
        &[1, 0, 0],
        &[1, 1, 0],
        &[0, 1, 1],
        &[1, 0, 1],
    ]);
    let found: BTreeSet<IntVec> = d.subdivision_rays.iter().cloned().collect();
    l.check(found == nine, "subdivision rays differ");
    l.check(
        d.ray_for(&d.rays) == Some(&IntVec::from_i64s(&[3, 2, 2])),
        "top ray is not (3,2,2)",
    );
    l.check(d.poset.len() == 9, format!("|P| = {}", d.poset.len()));
    l.check(
        d.chains.len() == STATED_CHAIN_COUNT,
        format!(
            "{} maximal chains, criterion states {STATED_CHAIN_COUNT} \
             (a quadrilateral has 4 vertices each in 2 edges, so its flags number 8)",
            d.chains.len()
        ),
    );
    let x = build_cw(&ToricCube::from_map(&m).unwrap());
    l.check(x.len() == 21, format!("{} cells", x.len()));
    l.check(
        x.f_vector() == vec![6, 9, 5, 1],
        format!("f-vector {:?}", x.f_vector()),
    );
    l.check(x.euler() == 1, format!("euler {}", x.euler()));
}

/// Map rows, expected system, display name.
type PlanarCase<'a> = (&'a [&'a [i64]], Vec<BinomialInequality>, &'a str);

fn criterion_5(l: &mut Line) {
    // a, b are the two image coordinates.
    let cases: [PlanarCase; 3] = [
        (
            &[&[1, 0], &[1, 2]],
            vec![ineq(&[0, 1], &[1, 0])],
            "(x, xy^2)",
        ),
        (
            &[&[1, 0], &[2, 1]],
            vec![ineq(&[0, 1], &[2, 0])],
            "(x, x^2y)",
        ),
        (
            &[&[2, 1], &[3, 2]],
            vec![ineq(&[2, 0], &[0, 1]), ineq(&[0, 2], &[3, 0])],
            "(x^2y, x^3y^2)",
        ),
    ];
    for (rows, ineqs, name) in cases {
        let start = Instant::now();
        let m = map(rows);
        let expected = system(2, ineqs);
        let s = implicitize(&m).unwrap();
        l.check(
            system_equiv(&s, &expected).unwrap(),
            format!("{name} differs"),
        );
        let grid = grid_image(&m, 4).unwrap();
        l.check(
            check_sample(&s, &grid).unwrap().is_empty(),
            format!("{name} grid violation"),
        );
        l.check(
            check_sample(&expected, &grid).unwrap().is_empty(),
            format!("{name} expected system fails on the grid"),
        );
        let t = start.elapsed();
        l.check(
            t < GOLDEN_LIMIT,
            format!("{name} took {:.2}s", t.as_secs_f64()),
        );
    }
}

fn criterion_6(l: &mut Line) {
    let mut rng = rng_from_env();
    let mut refined = 0;
    for k in 0..PROPERTY_MAPS {
        let m = random_map(&mut rng, 4, 4, 2);
        let c = check_map(&m, PROPERTY_RES, PARTITION_SAMPLES, &mut rng).unwrap();
        let tag = format!("map {k} {:?}", m.rows());
        l.check(
            c.violations == 0,
            format!("(a) {tag}: {} violations", c.violations),
        );
        l.check(c.supports_agree, format!("(b) {tag}"));
        l.check(c.round_trip, format!("(c) {tag}"));
        l.check(
            c.partition_failures == 0 && c.boundary_subcomplex,
            format!("(d) {tag}: {} partition failures", c.partition_failures),
        );
        // The report covers closed-cell and boundary Euler characteristics,
        // the diamond property and the total Euler characteristic.
        let x = build_cw(&ToricCube::from_map(&m).unwrap());
        let report = regularity_report(&x);
        l.check(report.pass && c.regular, format!("(e) {tag}"));
        if c.refinements > 0 {
            refined += 1;
        }
    }
    l.notes.push(format!(
        "{refined} of {PROPERTY_MAPS} maps needed refinement"
    ));
}

fn main() {
    let results = [
        criterion(
            1,
            "pairwise-product map implicitization",
            GOLDEN_LIMIT,
            criterion_1,
        ),
        criterion(
            2,
            "precube test, cubification, rays, parametrization",
            GOLDEN_LIMIT,
            criterion_2,
        ),
        criterion(
            3,
            "pairwise-product complex and covers",
            GOLDEN_LIMIT,
            criterion_3,
        ),
        criterion(
            4,
            "quadrilateral cone characteristic domain and complex",
            QUADRILATERAL_LIMIT,
            criterion_4,
        ),
        criterion(
            5,
            "planar map implicitizations",
            3 * GOLDEN_LIMIT,
            criterion_5,
        ),
        criterion(
            6,
            "property suite on seeded random maps",
            PROPERTY_LIMIT,
            criterion_6,
        ),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
