use affine_crystals::{
    common_depth, finite_tensor_e, finite_tensor_f, psi, psi_at_depth, theta, FiniteColumn,
    InfiniteColumn, Partition,
};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Outcome;

const RANDOM_PAIRS: usize = 10_000;
const WINDOW: i64 = 6;
const MAX_HEIGHT: usize = 4;
const EXTRA_DEPTHS: i64 = 5;

fn random_column(rng: &mut ChaCha8Rng) -> FiniteColumn {
    let height = rng.gen_range(0..=10);
    let letters = sample(rng, 21, height)
        .into_iter()
        .map(|x| x as i64 - 10)
        .collect();
    FiniteColumn::from_unordered(letters).unwrap()
}

fn sorted_letters(cols: &[&FiniteColumn]) -> Vec<i64> {
    let mut v: Vec<i64> = cols
        .iter()
        .flat_map(|c| c.letters().iter().copied())
        .collect();
    v.sort_unstable();
    v
}

fn random_pairs(rng: &mut ChaCha8Rng) -> usize {
    let mut bad = 0;
    for _ in 0..RANDOM_PAIRS {
        let (c1, c2) = (random_column(rng), random_column(rng));
        let (d2, d1) = theta(&c1, &c2).unwrap();
        let ok = d2.height() == c2.height()
            && d1.height() == c1.height()
            && theta(&d2, &d1).unwrap() == (c1.clone(), c2.clone())
            && sorted_letters(&[&c1, &c2]) == sorted_letters(&[&d2, &d1]);
        bad += usize::from(!ok);
    }
    bad
}

/// Every column with letters in `[0, WINDOW)` and height at most `MAX_HEIGHT`.
fn window_columns() -> Vec<FiniteColumn> {
    (0u32..1 << WINDOW)
        .filter(|m| m.count_ones() as usize <= MAX_HEIGHT)
        .map(|m| {
            FiniteColumn::from_unordered((0..WINDOW).filter(|&x| m >> x & 1 == 1).collect())
                .unwrap()
        })
        .collect()
}

fn swapped(pair: &[FiniteColumn]) -> Vec<FiniteColumn> {
    let (a, b) = theta(&pair[0], &pair[1]).unwrap();
    vec![a, b]
}

fn commutation() -> (usize, usize) {
    let cols = window_columns();
    let (mut checked, mut bad) = (0, 0);
    for c1 in &cols {
        for c2 in &cols {
            let pair = vec![c1.clone(), c2.clone()];
            let image = swapped(&pair);
            for i in -1..=WINDOW {
                checked += 2;
                let lowered = finite_tensor_f(i, &pair).map(|p| swapped(&p));
                bad += usize::from(lowered != finite_tensor_f(i, &image));
                let raised = finite_tensor_e(i, &pair).map(|p| swapped(&p));
                bad += usize::from(raised != finite_tensor_e(i, &image));
            }
        }
    }
    (checked, bad)
}

fn random_infinite(rng: &mut ChaCha8Rng) -> InfiniteColumn {
    let mut parts: Vec<usize> = (0..rng.gen_range(0..7))
        .map(|_| rng.gen_range(1..7))
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    InfiniteColumn::new(rng.gen_range(-5..6), Partition::new(parts).unwrap())
}

fn depth_independence(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let (mut checked, mut bad) = (0, 0);
    for _ in 0..2_000 {
        let (p1, p2) = (random_infinite(rng), random_infinite(rng));
        let base = psi(&p1, &p2);
        for t in 1..=EXTRA_DEPTHS {
            checked += 1;
            bad += usize::from(psi_at_depth(&p1, &p2, common_depth(&p1, &p2) - t).unwrap() != base);
        }
    }
    (checked, bad)
}

pub fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let pair_bad = random_pairs(&mut rng);
    let (comm_checked, comm_bad) = commutation();
    let (depth_checked, depth_bad) = depth_independence(&mut rng);
    Outcome::check(
        pair_bad + comm_bad + depth_bad == 0,
        format!(
            "involution/multiset {pair_bad}/{RANDOM_PAIRS} bad; commutation {comm_bad}/{comm_checked} bad; \
             depth independence {depth_bad}/{depth_checked} bad"
        ),
    )
}
