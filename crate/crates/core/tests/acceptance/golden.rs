use affine_crystals::{
    finite_f, mp_f_inf, swap_iso, theta as run_theta, AinfVertex, FiniteColumn, InfiniteColumn,
    Multicharge, Multipartition, Partition,
};

use crate::Outcome;

fn fc(letters: &[i64]) -> FiniteColumn {
    FiniteColumn::new(letters.to_vec()).unwrap()
}

fn ic(charge: i64, parts: &[usize]) -> InfiniteColumn {
    InfiniteColumn::new(charge, Partition::new(parts.to_vec()).unwrap())
}

pub fn theta() -> Outcome {
    let long = fc(&[9, 8, 7, 5, 4, 2]);
    let short = fc(&[7, 6, 5, 3, 1]);
    let forward = run_theta(&long, &short).unwrap();
    let expected = (fc(&[9, 7, 5, 4, 2]), fc(&[8, 7, 6, 5, 3, 1]));
    let backward = run_theta(&expected.0, &expected.1).unwrap();
    Outcome::check(
        forward == expected && backward == (long, short),
        format!(
            "height 6 x 5 gives {:?} / {:?}; reverse recovers the input",
            forward.0.letters(),
            forward.1.letters()
        ),
    )
}

pub fn psi() -> Outcome {
    let got = affine_crystals::psi(&ic(4, &[5, 5, 5, 4, 4, 3]), &ic(3, &[4, 4, 4, 3, 2]));
    let expected = (ic(3, &[6, 5, 4, 4, 3]), ic(4, &[4, 4, 4, 4, 3, 2]));
    Outcome::check(
        got == expected,
        format!(
            "got {}@{} and {}@{}",
            got.0.shape, got.0.charge, got.1.shape, got.1.charge
        ),
    )
}

pub fn swap() -> Outcome {
    let mp = Multipartition::from_parts([vec![4, 3, 3, 2], vec![3, 3, 1], vec![5, 3, 2]]).unwrap();
    let s = Multicharge::new(vec![4, 0, 1]).unwrap();
    let (image, charge) = swap_iso(&mp, &s, 1).unwrap();
    let expected =
        Multipartition::from_parts([vec![4, 3, 3, 2], vec![5, 3, 3, 1], vec![3, 2]]).unwrap();
    Outcome::check(
        image == expected && charge.as_slice() == [4, 1, 0],
        format!("swap of components 1, 2 gives {image} at {charge}"),
    )
}

pub fn ainf_operator() -> Outcome {
    let column = ic(3, &[4, 4, 3, 1]);
    let letters = column.letters_of(6);
    let column_view = finite_f(4, &letters);
    let expected_letters = fc(&[7, 6, 5, 1, -1, -2]);

    let vertex = AinfVertex::new(vec![column.clone()])
        .tensor_f(4)
        .map(|v| v.factors()[0].shape.clone());
    let charge = Multicharge::new(vec![3]).unwrap();
    let mp = Multipartition::new(vec![column.shape.clone()]).unwrap();
    let partition_view = mp_f_inf(4, &mp, &charge).unwrap();
    let expected = Partition::new(vec![4, 4, 4, 1]).unwrap();

    let ok = letters == fc(&[7, 6, 4, 1, -1, -2])
        && column_view == Some(expected_letters)
        && vertex.as_ref() == Some(&expected)
        && partition_view == Some(Multipartition::new(vec![expected.clone()]).unwrap());
    Outcome::check(
        ok,
        format!("f_4 on (4,4,3,1)@3 gives {expected} in column, tensor and partition views"),
    )
}
