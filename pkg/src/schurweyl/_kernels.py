"""Inner loops of the ergodic experiments.

Symbols arrive as dense indices: row symbol ``i`` is ``i - 1`` and column
symbol ``j*`` is ``k + l - j``, so index order is the alphabet order.

The mixed P tableau is kept compressed.  The top ``k`` rows hold
``top_counts[r, s]`` copies of row symbol ``s`` followed by a set of column
symbols (bitmask ``top_mask[r]``, bit ``b`` <-> dense index ``k + b``).  Rows
below ``k`` contain column symbols only, each at most once, so such a row is a
bitmask; consecutive equal rows are run-length encoded in
``run_mask``/``run_mult``.  Column symbols weakly increase down columns, which
bounds the number of runs by O(l^2).
"""
import numpy as np

from ._jit import njit


@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def _lowest_bit(x):
    b = 0
    while not (x >> b) & 1:
        b += 1
    return b


@njit
def _insert_run(run_mask, run_mult, nruns, pos, mask, mult):
    for i in range(nruns, pos, -1):
        run_mask[i] = run_mask[i - 1]
        run_mult[i] = run_mult[i - 1]
    run_mask[pos] = mask
    run_mult[pos] = mult
    return nruns + 1


@njit
def _compact(run_mask, run_mult, nruns):
    out = 0
    for i in range(nruns):
        if run_mult[i] == 0:
            continue
        if out > 0 and run_mask[out - 1] == run_mask[i]:
            run_mult[out - 1] += run_mult[i]
        else:
            run_mask[out] = run_mask[i]
            run_mult[out] = run_mult[i]
            out += 1
    return out


@njit
def mixed_insert(x, k, top_counts, top_mask, top_len, run_mask, run_mult, nruns):
    """Insert dense symbol ``x``; return (row, col, nruns), row/col 0-based."""
    carry = x
    r = 0
    while r < k:
        if carry < k:
            # row symbol: bump the leftmost entry strictly greater
            found = -1
            for s in range(carry + 1, k):
                if top_counts[r, s] > 0:
                    found = s
                    break
            if found >= 0:
                top_counts[r, found] -= 1
                top_counts[r, carry] += 1
                carry = found
                r += 1
                continue
            if top_mask[r] != 0:
                b = _lowest_bit(top_mask[r])
                top_mask[r] &= ~(1 << b)
                top_counts[r, carry] += 1
                carry = k + b
                r += 1
                continue
            top_counts[r, carry] += 1
            top_len[r] += 1
            return r, top_len[r] - 1, nruns
        else:
            # column symbol: bump the leftmost entry greater or equal
            b = carry - k
            m = (top_mask[r] >> b) << b
            if m != 0:
                b2 = _lowest_bit(m)
                if b2 != b:
                    top_mask[r] = (top_mask[r] & ~(1 << b2)) | (1 << b)
                    carry = k + b2
                r += 1
                continue
            top_mask[r] |= 1 << b
            top_len[r] += 1
            return r, top_len[r] - 1, nruns
    # below the top block only column symbols travel
    b = carry - k
    row = k
    i = 0
    while i < nruns:
        mask = run_mask[i]
        mult = run_mult[i]
        m = (mask >> b) << b
        if m != 0:
            b2 = _lowest_bit(m)
            if b2 != b:
                # first row of the run swaps b2 for b; the rest pass b2 through
                newmask = (mask & ~(1 << b2)) | (1 << b)
                run_mult[i] = mult - 1
                nruns = _insert_run(run_mask, run_mult, nruns, i, newmask, 1)
                i += 1
                b = b2
            row += mult
            i += 1
            continue
        newmask = mask | (1 << b)
        run_mult[i] = mult - 1
        nruns = _insert_run(run_mask, run_mult, nruns, i, newmask, 1)
        nruns = _compact(run_mask, run_mult, nruns)
        return row, _popcount(newmask) - 1, nruns
    run_mask[nruns] = 1 << b
    run_mult[nruns] = 1
    nruns = _compact(run_mask, run_mult, nruns + 1)
    return row, 0, nruns


@njit
def youngize_kernel(word, k, l, log_steps, run_cap):
    """Fold the mixed insertion over ``word``.

    Returns per-step new-cell coordinates, row/column lengths at the
    requested steps and the final compressed tableau.
    """
    n = word.shape[0]
    top_counts = np.zeros((k, k), dtype=np.int64)
    top_mask = np.zeros(k, dtype=np.int64)
    top_len = np.zeros(k, dtype=np.int64)
    run_mask = np.zeros(run_cap, dtype=np.int64)
    run_mult = np.zeros(run_cap, dtype=np.int64)
    nruns = 0
    new_row = np.empty(n, dtype=np.int64)
    new_col = np.empty(n, dtype=np.int64)
    nlog = log_steps.shape[0]
    row_snap = np.zeros((nlog, k), dtype=np.int64)
    col_snap = np.zeros((nlog, l), dtype=np.int64)
    li = 0
    while li < nlog and log_steps[li] <= 0:
        li += 1
    for t in range(n):
        r, c, nruns = mixed_insert(word[t], k, top_counts, top_mask, top_len, run_mask, run_mult, nruns)
        if nruns >= run_cap - 2:
            raise RuntimeError("run capacity exceeded")
        new_row[t] = r
        new_col[t] = c
        while li < nlog and log_steps[li] == t + 1:
            for i in range(k):
                row_snap[li, i] = top_len[i]
            for j in range(l):
                cnt = 0
                for i in range(k):
                    if top_len[i] > j:
                        cnt += 1
                for i in range(nruns):
                    if _popcount(run_mask[i]) > j:
                        cnt += run_mult[i]
                col_snap[li, j] = cnt
            li += 1
    return new_row, new_col, row_snap, col_snap, top_counts, top_mask, run_mask[:nruns].copy(), run_mult[:nruns].copy()


@njit
def bracket_kernel(word):
    """Pair every 1 with the nearest unpaired 2 to its left.

    This is iterated bracketing of ``21`` factors; returns (left, right, npairs)
    with 0-based positions of the paired 2 and 1.
    """
    n = word.shape[0]
    stack = np.empty(n, dtype=np.int64)
    left = np.empty(n, dtype=np.int64)
    right = np.empty(n, dtype=np.int64)
    top = 0
    npairs = 0
    for i in range(n):
        if word[i] == 2:
            stack[top] = i
            top += 1
        elif top > 0:
            top -= 1
            left[npairs] = stack[top]
            right[npairs] = i
            npairs += 1
    return left[:npairs].copy(), right[:npairs].copy(), npairs
