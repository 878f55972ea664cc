use stdmono_core::sections::{dim_sections, restriction_analysis};
use stdmono_core::tableaux::Shape;
use stdmono_core::weyl::Word;

fn ambient(n: usize, m: &[u32]) -> Shape {
    Shape::ambient(n, m.to_vec()).unwrap()
}

#[test]
fn n3_dims_by_degree() {
    for (m, d) in [([1u32, 1, 1], 13usize), ([2, 2, 2], 51), ([3, 3, 3], 130)] {
        let c = dim_sections(&ambient(3, &m));
        assert_eq!(c.rank, d, "m={m:?}");
        assert!(c.pass());
    }
}

#[test]
fn n4_unit_multiplicity() {
    let c = dim_sections(&ambient(4, &[1; 6]));
    assert_eq!(c.generator_count, 1728);
    assert_eq!((c.rank, c.straight_count), (394, 394));
}

#[test]
fn n4_restriction_report() {
    let j = Word::new(4, vec![1, 0, 0, 0, 2, 1]).unwrap();
    let r = restriction_analysis(&[1; 6], &j).unwrap();
    assert_eq!((r.dim_i, r.dim_j), (40, 13));
    println!("{r:?}");
}

#[test]
fn n4_doubled_multiplicity() {
    let shape = ambient(4, &[1; 6]).scaled(2);
    assert_eq!(shape.class_count(), 226_800);
    let c = dim_sections(&shape);
    assert_eq!(c.rank, 7497);
    assert!(c.pass());
}
