"""Pure-Python kernels.  Semantics mirror _ckernels exactly."""


def apply_map(vals, idx_map):
    return bytes(map(vals.__getitem__, idx_map))


def apply_map_add(vals, idx_map, add, k):
    return bytes((vals[m] + b) % k for m, b in zip(idx_map, add))


def min_apply_maps(vals, idx_maps):
    best = None
    for m in idx_maps:
        cand = bytes(map(vals.__getitem__, m))
        if best is None or cand < best:
            best = cand
    return best


def ess_mask(vals, k, n):
    size = len(vals)
    s = size
    mask = 0
    for var in range(n):
        s //= k
        block = s * k
        essential = False
        base = 0
        while base < size and not essential:
            for off in range(base, base + s):
                first = vals[off]
                for c in range(1, k):
                    if vals[off + c * s] != first:
                        essential = True
                        break
                if essential:
                    break
            base += block
        if essential:
            mask |= 1 << var
    return mask
