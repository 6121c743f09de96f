//! Rich lines and the base/top lines of a triangle.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{collinear, Line2, Point2};

/// All connecting lines holding at least `k` points, with their point count,
/// sorted by canonical line.
pub fn rich_lines(pts: &[Point2], k: usize) -> Result<Vec<(Line2, usize)>> {
    if k < 2 {
        return Err(Error::InvalidParam(format!("rich_lines needs k >= 2, got {k}")));
    }
    let mut on: BTreeMap<Line2, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i] == pts[j] {
                continue;
            }
            let l = Line2::through(&pts[i], &pts[j])?;
            let e = on.entry(l).or_default();
            e.insert(i);
            e.insert(j);
        }
    }
    Ok(on.into_iter().map(|(l, s)| (l, s.len())).filter(|(_, c)| *c >= k).collect())
}

/// Base lines through the sides of a triangle and the parallel top lines
/// through the opposite vertices. Index order: `ab`, `ac`, `bc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopLines {
    #[serde(skip)]
    pub base: [Line2; 3],
    #[serde(skip)]
    pub top: [Line2; 3],
}

pub fn top_lines(a: &Point2, b: &Point2, c: &Point2) -> Result<TopLines> {
    if collinear(a, b, c) {
        return Err(Error::Degenerate);
    }
    let ab = Line2::through(a, b)?;
    let ac = Line2::through(a, c)?;
    let bc = Line2::through(b, c)?;
    let top = [ab.parallel_through(c), ac.parallel_through(b), bc.parallel_through(a)];
    Ok(TopLines { base: [ab, ac, bc], top })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(g: i64) -> Vec<Point2> {
        let mut v = Vec::new();
        for x in 0..g {
            for y in 0..g {
                v.push(Point2::from_ints(x, y));
            }
        }
        v
    }

    #[test]
    fn rich_lines_in_3x3() {
        assert_eq!(rich_lines(&grid(3), 3).unwrap().len(), 8);
        let all = rich_lines(&grid(3), 2).unwrap();
        assert_eq!(all.len(), 20);
        assert_eq!(all.iter().filter(|(_, c)| *c == 3).count(), 8);
        assert!(rich_lines(&grid(3), 10).unwrap().is_empty());
    }

    #[test]
    fn top_lines_example() {
        let t = top_lines(&Point2::from_ints(0, 0), &Point2::from_ints(1, 0), &Point2::from_ints(0, 2)).unwrap();
        assert_eq!(t.top[0], Line2::from_ints(0, 1, -2).unwrap());
        assert_eq!(t.top[1], Line2::from_ints(1, 0, -1).unwrap());
        assert_eq!(t.top[2], Line2::from_ints(2, 1, 0).unwrap());
        for i in 0..3 {
            assert!(t.top[i].is_parallel(&t.base[i]));
        }
    }

    #[test]
    fn top_lines_translate_with_the_triangle() {
        let (a, b, c) = (Point2::from_ints(0, 0), Point2::from_ints(3, 1), Point2::from_ints(1, 4));
        let s = Point2::from_ints(5, -2);
        let t1 = top_lines(&a, &b, &c).unwrap();
        let t2 = top_lines(&a.add(&s), &b.add(&s), &c.add(&s)).unwrap();
        for i in 0..3 {
            assert!(t1.top[i].is_parallel(&t2.top[i]));
            // the translated line passes through the translated vertex
            let on = t1.top[i].point().add(&s);
            assert!(t2.top[i].contains(&on));
        }
    }
}
