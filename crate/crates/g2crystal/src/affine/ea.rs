//! Case tables for `E_A` and `F_A` on elements with `r = 0`.
//!
//! The recursive cases read the previous level through `prev` and then apply
//! `e_0` at the current level through `e0`. Results are not validated here;
//! the caller checks membership and reports faults.

use super::{floor_div, AParam};

type Lookup<'a> = &'a dyn Fn(AParam) -> Result<Option<AParam>, String>;
type Step<'a> = &'a dyn Fn(AParam) -> Option<AParam>;

fn make(v: [i64; 5]) -> Result<Option<AParam>, String> {
    AParam::from_signed([v[0], v[1], v[2], v[3], v[4], 0])
        .map(Some)
        .ok_or_else(|| format!("negative entry in case result {v:?}"))
}

/// Recursive case: `e_0 (iota (X_{l-1}(i, k-1, j-1, p, q-1, 0)))`.
fn induction(b: AParam, prev: Lookup, e0: Step) -> Result<Option<AParam>, String> {
    let [i, k, j, p, q, _] = b.signed();
    let below = AParam::from_signed([i, k - 1, j - 1, p, q - 1, 0])
        .ok_or_else(|| format!("induction source of {b} is negative"))?;
    match prev(below)? {
        None => Ok(None),
        Some(y) => e0(y.iota())
            .map(Some)
            .ok_or_else(|| format!("e_0 vanishes on iota({y}) while inducting {b}")),
    }
}

/// `E_A` on `b = f_1^q f_0^p hw(i, k, j)` at level `l`.
pub fn ea_plus(l: u32, b: AParam, prev: Lookup, e0: Step) -> Result<Option<AParam>, String> {
    debug_assert_eq!(b.r, 0);
    let [i, k, j, p, q, _] = b.signed();
    let l = i64::from(l);
    let pq_min = p == q.min(j);
    // case (2): move to the next j, guarded at the top of the block range
    let shift_j = || if j < l - i { make([i, k, j + 1, p + 1, q + 1]) } else { Ok(None) };
    if i < k && i < j {
        let x = floor_div(j - k, 3);
        if pq_min && q <= j - 1 - x {
            return make([i, k - 1, j, p, q]);
        }
        if pq_min && q >= j - x {
            return shift_j();
        }
        if p < j && p < q {
            return induction(b, prev, e0);
        }
        return Err(format!("no E_A case applies to {b}"));
    }
    if k == i && j >= i + 2 {
        let x = floor_div(j - i, 3);
        if p <= j - 1 - x {
            return make([i + 1, k + 1, j - 1, p, q + 1]);
        }
        return shift_j();
    }
    if k == i && j == i + 1 {
        if p <= i {
            return make([i, k + 1, j - 1, p, q + 1]);
        }
        return shift_j();
    }
    if k == i && j == i {
        if p < i {
            return make([i - 1, k + 1, j - 1, p, q + 1]);
        }
        return shift_j();
    }
    if k > i && j == i {
        let x = floor_div(i - k, 3);
        if q <= p - 1 - x {
            return make([i, k - 1, j, p, q]);
        }
        if p == i {
            return shift_j();
        }
        return make([i - 1, k + 1, j - 1, p, q + 1]);
    }
    Err(format!("no E_A case applies to {b}"))
}

/// `F_A` on `b = f_1^q f_0^p hw(i, k, j)` at level `l`, from its own case table.
pub fn fa_plus(l: u32, b: AParam, prev: Lookup, e0: Step) -> Result<Option<AParam>, String> {
    debug_assert_eq!(b.r, 0);
    let [i, k, j, p, q, _] = b.signed();
    let l = i64::from(l);
    let pq_min = p == q.min(j);
    // case (1'): grow k, guarded at the top of the block range
    let grow_k = || if k < l - i { make([i, k + 1, j, p, q]) } else { Ok(None) };
    if i < k && i < j {
        let x = floor_div(j - k - 1, 3);
        if pq_min && q <= j - 1 - x {
            return grow_k();
        }
        if pq_min && q >= j - x {
            return make([i, k, j - 1, p - 1, q - 1]);
        }
        return induction(b, prev, e0);
    }
    if k == i && j > i {
        let x = floor_div(j - k - 1, 3);
        if p <= j - 1 - x {
            if q == p {
                return grow_k();
            }
            return make([i - 1, k - 1, j + 1, p, q - 1]);
        }
        return make([i, k, j - 1, p - 1, q - 1]);
    }
    if k == i && j == i {
        if q == p {
            return grow_k();
        }
        return make([i - 1, k - 1, j + 1, p, q - 1]);
    }
    if k == i + 1 && j == i {
        if q == p {
            return grow_k();
        }
        return make([i, k - 1, j + 1, p, q - 1]);
    }
    if k >= i + 2 && j == i {
        let x = floor_div(i - k - 1, 3);
        if q <= p - 1 - x {
            return grow_k();
        }
        return make([i + 1, k - 1, j + 1, p, q - 1]);
    }
    Err(format!("no F_A case applies to {b}"))
}
