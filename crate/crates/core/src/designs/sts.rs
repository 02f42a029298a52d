//! Steiner triple systems (Bose for v = 3 mod 6, Skolem for v = 1 mod 6).

use super::verify::verify_sts;
use crate::block::BlockSystem;
use crate::error::{unsupported, Result};

pub fn construct_sts(v: u32) -> Result<BlockSystem> {
    let sys = match v % 6 {
        3 => bose(v),
        1 if v >= 7 => skolem(v),
        _ => return unsupported(format!("no Steiner triple system on {v} points (need v = 1, 3 mod 6, v >= 3)")),
    };
    let sys = BlockSystem::new(v, 3, sys)?;
    verify_sts(&sys)?;
    Ok(sys)
}

fn bose(v: u32) -> Vec<Vec<u32>> {
    let m = v / 3;
    let n = (m - 1) / 2;
    let p = |x: u32, i: u32| (i % 3) * m + x;
    let op = |x: u32, y: u32| ((x + y) * (n + 1)) % m;
    let mut blocks = Vec::new();
    for x in 0..m {
        blocks.push(vec![p(x, 0), p(x, 1), p(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                blocks.push(vec![p(x, i), p(y, i), p(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

fn skolem(v: u32) -> Vec<Vec<u32>> {
    let n = (v - 1) / 6;
    let m = 2 * n;
    let inf = v - 1;
    let p = |x: u32, i: u32| (i % 3) * m + x;
    let sigma = |s: u32| if s % 2 == 0 { s / 2 } else { n + s / 2 };
    let op = |x: u32, y: u32| sigma((x + y) % m);
    let mut blocks = Vec::new();
    for x in 0..n {
        blocks.push(vec![p(x, 0), p(x, 1), p(x, 2)]);
        for i in 0..3 {
            blocks.push(vec![inf, p(n + x, i), p(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                blocks.push(vec![p(x, i), p(y, i), p(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_small_orders() {
        for v in (3..=45).filter(|v| v % 6 == 1 || v % 6 == 3) {
            let s = construct_sts(v).unwrap();
            assert_eq!(s.len() as u32, v * (v - 1) / 6, "v={v}");
        }
    }

    #[test]
    fn unsupported_orders() {
        for v in [0, 1, 2, 4, 5, 6, 8, 11] {
            assert!(construct_sts(v).is_err(), "v={v}");
        }
    }
}
