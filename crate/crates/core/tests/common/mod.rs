#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zetacode::gf::Field;
use zetacode::linear_code::LinearCode;

pub fn binary_code(rows: &[&str]) -> LinearCode {
    let f = Field::new(2).unwrap();
    let rows: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.bytes().map(|b| u32::from(b - b'0')).collect())
        .collect();
    LinearCode::from_rows(f, &rows).unwrap()
}

pub fn hamming_8_4() -> LinearCode {
    binary_code(&["10000111", "01001011", "00101101", "00011110"])
}

pub fn ten_five() -> LinearCode {
    binary_code(&[
        "1111000000",
        "0000111111",
        "1000111000",
        "0100110100",
        "0010101010",
    ])
}

pub fn tetracode() -> LinearCode {
    LinearCode::from_rows(
        Field::new(3).unwrap(),
        &[vec![1, 1, 1, 0], vec![0, 1, 2, 1]],
    )
    .unwrap()
}

/// Seeded codes over small fields with q^k and q^(n-k) at most `side`.
pub fn random_codes(seed: u64, count: usize, side: u64) -> Vec<LinearCode> {
    const ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = ORDERS[rng.gen_range(0..ORDERS.len())];
        let max_side = (1..).take_while(|e| q.pow(*e) <= side).last().unwrap_or(0) as usize;
        if max_side == 0 {
            continue;
        }
        let k = rng.gen_range(1..=max_side);
        let r = rng.gen_range(1..=max_side);
        let n = k + r;
        let f = Field::new(q).unwrap();
        // systematic generator with a shuffled column order
        let mut cols: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            cols.swap(i, rng.gen_range(0..=i));
        }
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|i| {
                let mut row = vec![0u32; n];
                row[cols[i]] = 1;
                for &c in &cols[k..] {
                    row[c] = rng.gen_range(0..q as u32);
                }
                row
            })
            .collect();
        out.push(LinearCode::from_rows(f, &rows).unwrap());
    }
    out
}
