mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rand::Rng;
use triarea::exact::{frac, int, to_f64, Line2, Point2, Point3};
use triarea::incidence::{
    cylinder_multiset, cylinder_triple_intersection, hyperbola_pair, line_conic, orthogonal_pairs, parallelogram_area,
    point_cylinder_incidences, rich_lines, tangency_law_holds, top_lines, Cylinder3, LineConic,
};
use triarea::Error;

/// Lines as gcd-normalized `(a, b, c)` with `a > 0` or `a = 0, b > 0`,
/// collected from all point pairs.
fn lines_oracle(p: &[(i64, i64)]) -> BTreeMap<(i64, i64, i64), BTreeSet<usize>> {
    let mut m: BTreeMap<_, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let (a, b) = (p[j].1 - p[i].1, p[i].0 - p[j].0);
            let c = -(a * p[i].0 + b * p[i].1);
            let g = a.gcd(&b).gcd(&c);
            let s = if a < 0 || (a == 0 && b < 0) { -g } else { g };
            let e = m.entry((a / s, b / s, c / s)).or_default();
            e.insert(i);
            e.insert(j);
        }
    }
    m
}

#[test]
fn rich_lines_match_pairwise_enumeration() {
    let mut r = common::rng(21);
    for _ in 0..40 {
        let pts = common::random_points2(&mut r, 14, 5);
        let raw: Vec<(i64, i64)> = pts.iter().map(|p| (p.x.to_integer().try_into().unwrap(), p.y.to_integer().try_into().unwrap())).collect();
        let oracle = lines_oracle(&raw);
        for k in 2..=5 {
            let want = oracle.values().filter(|s| s.len() >= k).count();
            let got = rich_lines(&pts, k).unwrap();
            assert_eq!(got.len(), want, "k={k}");
            for (l, c) in &got {
                assert_eq!(pts.iter().filter(|p| l.contains(p)).count(), *c);
            }
        }
    }
    assert!(matches!(rich_lines(&[], 1), Err(Error::InvalidParam(_))));
}

#[test]
fn tangency_law_on_random_triangles() {
    let mut r = common::rng(5);
    let mut tested = 0;
    while tested < 60 {
        let p: Vec<Point2> = (0..3).map(|_| Point2::from_ints(r.gen_range(-9..10), r.gen_range(-9..10))).collect();
        if common::all_collinear(&p) {
            continue;
        }
        assert!(tangency_law_holds(&p[0], &p[1], &p[2]).unwrap());
        tested += 1;
    }
    let same = Point2::from_ints(1, 1);
    assert!(tangency_law_holds(&same, &Point2::from_ints(2, 2), &Point2::from_ints(3, 3)).is_err());
}

#[test]
fn top_lines_are_parallel_through_the_opposite_vertex() {
    let (a, b, c) = (Point2::from_ints(0, 0), Point2::from_ints(4, 1), Point2::from_ints(1, 3));
    let t = top_lines(&a, &b, &c).unwrap();
    for (i, apex) in [&c, &b, &a].into_iter().enumerate() {
        assert!(t.top[i].is_parallel(&t.base[i]));
        assert!(t.top[i].contains(apex));
        assert!(!t.base[i].contains(apex));
    }
}

#[test]
fn hyperbola_pair_is_the_fixed_parallelogram_locus() {
    let l1 = Line2::from_ints(1, -2, 3).unwrap();
    let l2 = Line2::from_ints(3, 1, -1).unwrap();
    let area = int(7);
    let (plus, minus) = hyperbola_pair(&l1, &l2, &area).unwrap();
    let mut on = 0;
    for x in -15..=15 {
        for y in -15..=15 {
            let p = Point2::from_ints(x, y);
            let k = parallelogram_area(&l1, &l2, &p).unwrap();
            assert_eq!(k == area, plus.contains(&p) || minus.contains(&p), "{p}");
            on += usize::from(k == area);
        }
    }
    assert!(on > 0);
    // a nondegenerate conic contains no line
    let v = Line2::from_ints(1, 0, -2).unwrap();
    assert!(!matches!(line_conic(&v, &plus), LineConic::Contained));
}

#[test]
fn unit_area_cylinder_holds_exactly_the_unit_apexes() {
    let mut r = common::rng(9);
    let pts = common::random_points3(&mut r, 40, 4);
    let (a, b) = (&pts[0], &pts[1]);
    let cyl = Cylinder3::unit_area(a, b).unwrap();
    for c in &pts[2..] {
        // 4·area² = |ab × ac|² in plain integers
        let ints = |p: &Point3| -> [i64; 3] { [&p.x, &p.y, &p.z].map(|v| v.to_integer().try_into().unwrap()) };
        let (a0, b0, c0) = (ints(a), ints(b), ints(c));
        let u: [i64; 3] = std::array::from_fn(|i| b0[i] - a0[i]);
        let v: [i64; 3] = std::array::from_fn(|i| c0[i] - a0[i]);
        let cr: [i64; 3] = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
        let k: i64 = cr.iter().map(|x| x * x).sum();
        assert_eq!(cyl.contains(c), k == 4, "{c}");
    }
}

#[test]
fn pair_cylinders_count_unit_triangles_three_times() {
    let mut r = common::rng(14);
    let pts = common::random_points3(&mut r, 12, 3);
    let cyls: Vec<Cylinder3> = (0..pts.len())
        .flat_map(|i| (i + 1..pts.len()).map(move |j| (i, j)))
        .map(|(i, j)| Cylinder3::unit_area(&pts[i], &pts[j]).unwrap())
        .collect();
    let rep = point_cylinder_incidences(&pts, &cyls);
    // each unit triangle puts its apex on the cylinder of each of its sides
    let unit = triarea::census::count_unit_area(&pts).unwrap();
    assert_eq!(rep.total, 3 * unit);
    assert_eq!(rep.type1 + rep.type2, rep.total);
    let m = cylinder_multiset(&pts).unwrap();
    assert_eq!(m.total(), (pts.len() * (pts.len() - 1) / 2) as u64);
}

#[test]
fn orthogonal_pairs_by_dot_product() {
    let mut r = common::rng(2);
    let pts = common::random_points3(&mut r, 30, 5);
    let o = Point3::from_ints(2, 2, 2);
    let got: BTreeSet<(usize, usize)> = orthogonal_pairs(&pts, &o).into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
    let mut want = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (u, v) = (pts[i].sub(&o), pts[j].sub(&o));
            if !u.is_zero() && !v.is_zero() && u.dot(&v) == int(0) {
                want.insert((i, j));
            }
        }
    }
    assert_eq!(got, want);
}

#[test]
fn triple_points_lie_on_all_three_cylinders() {
    let c = |p: [i64; 3], d: [i64; 3], r: (i64, i64)| {
        Cylinder3::new(&Point3::from_ints(p[0], p[1], p[2]), &Point3::from_ints(d[0], d[1], d[2]), frac(r.0, r.1)).unwrap()
    };
    let cs = [c([0, 0, 0], [1, 1, 0], (3, 1)), c([1, 0, 0], [0, 1, 1], (5, 2)), c([0, 1, 0], [1, 0, 2], (4, 1))];
    let t = cylinder_triple_intersection(&cs[0], &cs[1], &cs[2]).unwrap();
    assert_eq!(t.points.len(), t.count);
    assert!(t.count <= 8);
    assert!(t.count > 0);
    for x in &t.points {
        for cy in &cs {
            let a = [&cy.axis_point.x, &cy.axis_point.y, &cy.axis_point.z].map(to_f64);
            let d = [&cy.axis_dir.x, &cy.axis_dir.y, &cy.axis_dir.z].map(to_f64);
            let y: Vec<f64> = (0..3).map(|i| x[i] - a[i]).collect();
            let dd: f64 = d.iter().map(|v| v * v).sum();
            let yd: f64 = (0..3).map(|i| y[i] * d[i]).sum();
            let dist2 = y.iter().map(|v| v * v).sum::<f64>() - yd * yd / dd;
            assert!((dist2 - to_f64(&cy.radius_sq)).abs() < 1e-6, "{x:?}");
        }
    }
}
