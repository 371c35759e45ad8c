mod common;

use lie_centralizer::catalog::{cmd_maximal, cmd_parabolic, cmd_tables, select_types, TableKind};
use lie_centralizer::kernel::{centralizer_at_fraction, kernel_element_order};
use lie_centralizer::linalg::Rational;
use lie_centralizer::weyl_cell::{convert_to_root_basis, fundamental_fraction};
use lie_centralizer::{full_centralizer, LieType, RootSystem};

use common::labellings;

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse::<LieType>().unwrap())
}

fn groups(r: &lie_centralizer::CentralizerResult) -> Vec<String> {
    let mut g: Vec<String> = r.local_type.components.iter().map(|c| c.group().to_string()).collect();
    g.sort();
    g
}

#[test]
fn maximal_rows() {
    let e8 = cmd_maximal(&rs("E8")).unwrap();
    let dens: Vec<i64> = e8.iter().map(|r| r.denominator).collect();
    assert_eq!(dens, [2, 3, 4, 6, 5, 4, 3, 2]);
    let maximal: Vec<bool> = e8.iter().map(|r| r.report.maximal.unwrap()).collect();
    assert_eq!(maximal, [true, true, false, false, true, false, true, true]);

    let f4 = cmd_maximal(&rs("F4")).unwrap();
    assert_eq!(f4[0].report.centralizer(), "Spin(9)");
    assert_eq!(f4[0].report.kernel.order, 1);
    let dens: Vec<i64> = f4.iter().map(|r| r.denominator).collect();
    assert_eq!(dens, [2, 4, 3, 2]);

    let g2 = cmd_maximal(&rs("G2")).unwrap();
    assert_eq!(g2.len(), 2);
    assert!(g2.iter().all(|r| r.report.maximal == Some(true)));
}

#[test]
fn parabolic_rows() {
    let e8 = cmd_parabolic(&rs("E8"), 4).unwrap();
    let mut names: Vec<&str> = e8.factors.iter().map(|f| f.group.as_str()).collect();
    names.sort();
    assert_eq!(names, ["SU(2)", "SU(3)", "SU(5)"]);
    assert_eq!(e8.radical_rank, 1);
    assert_eq!(e8.kernel.invariant_factors, [30]);
    assert_eq!(cmd_parabolic(&rs("F4"), 1).unwrap().centralizer(), "(Spin(7)×S¹)/Z2");
    assert_eq!(cmd_parabolic(&rs("E7"), 7).unwrap().centralizer(), "(E6×S¹)/Z3");
}

#[test]
fn kernels_of_table_points() {
    let e8 = rs("E8");
    let r = centralizer_at_fraction(&e8, 3, 6).unwrap();
    assert_eq!(r.kernel.invariant_factors, [6]);
    assert_eq!(groups(&r), ["SU(2)", "SU(3)", "SU(6)"]);
    assert_eq!(centralizer_at_fraction(&e8, 4, 5).unwrap().hu.len(), 4);
    assert_eq!(centralizer_at_fraction(&e8, 3, 12).unwrap().hu.len(), 29);
    let r = centralizer_at_fraction(&e8, 2, 8).unwrap();
    assert_eq!(r.describe(), "(SU(2)×SU(7)×S¹)/Z14");

    let f4 = rs("F4");
    assert!(centralizer_at_fraction(&f4, 0, 2).unwrap().hu.is_empty());
    assert_eq!(centralizer_at_fraction(&f4, 1, 8).unwrap().kernel.invariant_factors, [6]);

    let g2 = rs("G2");
    assert_eq!(centralizer_at_fraction(&g2, 0, 2).unwrap().kernel.invariant_factors, [2]);
    assert_eq!(centralizer_at_fraction(&g2, 1, 3).unwrap().kernel.order, 1);

    let e6 = rs("E6");
    assert_eq!(centralizer_at_fraction(&e6, 3, 3).unwrap().describe(), "(SU(3)×SU(3)×SU(3))/Z3");
    assert_eq!(centralizer_at_fraction(&rs("E7"), 1, 2).unwrap().describe(), "SU(8)/Z2");
}

/// Order of the printed element `exp(ω_a of factor c) × exp(r)` under some labelling.
fn element_orders(group: &str, lambda: Vec<Rational>, factors: &[&str], slot: (usize, usize), r: Vec<Rational>) -> Vec<u64> {
    let rs = rs(group);
    let res = full_centralizer(&rs, &lambda).unwrap();
    let emb = res.embedding.as_ref().unwrap();
    let gamma: Vec<Rational> = convert_to_root_basis(&rs, &r).into_iter().map(|x| -x).collect();
    let factors: Vec<String> = factors.iter().map(|s| s.to_string()).collect();
    labellings(&res.local_type, &factors)
        .iter()
        .filter_map(|lab| {
            let mut theta = vec![None; res.local_type.components.len()];
            theta[lab.factor[slot.0 - 1]] = Some(lab.weight[slot.0 - 1][slot.1 - 1]);
            kernel_element_order(&res.local_type, emb, &theta, &gamma)
        })
        .collect()
}

#[test]
fn printed_elements_have_stated_orders() {
    let q = |p, d| Rational::new(p, d);
    let orders = element_orders(
        "E7",
        fundamental_fraction(7, 6, 2),
        &["E6"],
        (1, 1),
        [0, 0, 0, 0, 0, 0].iter().map(|&x| q(x, 1)).chain([q(-4, 3)]).collect(),
    );
    assert!(orders.contains(&3), "{orders:?}");
    let orders = element_orders(
        "E6",
        fundamental_fraction(6, 0, 2),
        &["Spin(10)"],
        (1, 5),
        [q(-9, 4)].into_iter().chain([0, 0, 0, 0, 0].iter().map(|&x| q(x, 1))).collect(),
    );
    assert!(orders.contains(&4), "{orders:?}");
}

#[test]
fn regenerated_tables() {
    let text = cmd_tables(TableKind::Deficiency, &select_types(Some("exceptional")).unwrap());
    for row in ["E6", "E7", "G2", "F4", "E8"] {
        assert!(text.contains(row), "{text}");
    }
    let text = cmd_tables(TableKind::MinimalWeights, &select_types(Some("Spin(10)")).unwrap());
    assert!(text.contains("ω1, ω4, ω5"), "{text}");
    let text = cmd_tables(TableKind::Centers, &select_types(Some("D4")).unwrap());
    assert!(text.contains("Z2⊕Z2"), "{text}");
    assert_eq!(select_types(None).unwrap().len(), 31);
    assert!(select_types(Some("Q7")).is_err());
}
