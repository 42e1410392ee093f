mod common;

use common::{bipyramid, quad, running_examples};
use proptest::prelude::*;
use tropaint::geometry::{rat, Rational};
use tropaint::painting::{paint, painting_cone, Color, PaintSpec};
use tropaint::subdivision::Lifting;
use tropaint::tropical::{dual_complex, isotopy_map};

fn colors_at(raw: &[i64], c: &Rational, which: usize) -> Vec<Color> {
    let (_, config, alpha) = &running_examples()[which];
    let eta = Lifting::from_ints(raw);
    let (p, _) = dual_complex(config, &eta).unwrap();
    paint(&p, &PaintSpec { eta, c: c.clone(), alpha: alpha.clone() }).unwrap().vertex_colors()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vertices_attain_their_cell(raw in prop::collection::vec(-6i64..=6, 5)) {
        for c in [quad(), bipyramid()] {
            let eta = Lifting::from_ints(&raw);
            let (p, s) = dual_complex(&c, &eta).unwrap();
            let f = p.polynomial();
            for (i, cell) in s.maximal_cells().iter().enumerate() {
                let (_, argmin) = f.evaluate(&p.vertex_points[i]);
                prop_assert_eq!(&argmin, &cell.marks);
            }
        }
    }

    #[test]
    fn isotopic_liftings_match(raw in prop::collection::vec(-6i64..=6, 5), k in 1i64..=5) {
        let c = quad();
        let eta = Lifting::from_ints(&raw);
        let (p1, _) = dual_complex(&c, &eta).unwrap();
        let (p2, _) = dual_complex(&c, &eta.scale(&rat(k, 2))).unwrap();
        let map = isotopy_map(&p1, &p2).unwrap();
        for (i, &j) in map.iter().enumerate() {
            prop_assert_eq!(&p1.cells[i].marking, &p2.cells[j].marking);
        }
    }

    #[test]
    fn raising_the_level_only_cools(raw in prop::collection::vec(-6i64..=6, 5), lo in -24i64..=24, step in 1i64..=12, which in 0usize..2) {
        let (c1, c2) = (rat(lo, 4), rat(lo + step, 4));
        let (a, b) = (colors_at(&raw, &c1, which), colors_at(&raw, &c2, which));
        for (x, y) in a.iter().zip(&b) {
            prop_assert!(!(*x == Color::Blue && *y != Color::Blue));
            prop_assert!(!(*y == Color::Red && *x != Color::Red));
        }
    }

    #[test]
    fn painting_cone_contains_its_spec(raw in prop::collection::vec(-5i64..=5, 5), level in -12i64..=12, which in 0usize..2) {
        let (_, config, alpha) = &running_examples()[which];
        let eta = Lifting::from_ints(&raw);
        let (p, _) = dual_complex(config, &eta).unwrap();
        let spec = PaintSpec { eta: eta.clone(), c: rat(level, 2), alpha: alpha.clone() };
        let pc = paint(&p, &spec).unwrap();
        let cone = painting_cone(&pc, alpha).unwrap();
        prop_assert!(cone.contains(&spec.eta, &spec.c));
        let (eta2, c2) = cone.sample().unwrap().unwrap();
        let (q, _) = dual_complex(config, &eta2).unwrap();
        let again = paint(&q, &PaintSpec { eta: eta2, c: c2, alpha: alpha.clone() }).unwrap();
        prop_assert_eq!(again.key(), pc.key());
    }
}
