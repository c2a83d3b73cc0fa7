# cython: boundscheck=False, wraparound=False, cdivision=True
"""Early-exit scan kernels for the grid oracles.

Inputs are flat (or 2-D) contiguous float64 buffers prepared by the
dispatcher in ``_scan``; semantics must match ``_scan_np`` exactly.
"""


def any_improvement(const double[::1] values, double base, double eps):
    cdef Py_ssize_t k
    cdef double cut = base + eps
    for k in range(values.shape[0]):
        if values[k] > cut:
            return True
    return False


def any_dominance_gap(const double[:, ::1] alts, const double[::1] cand, double eps):
    cdef Py_ssize_t a, c
    for a in range(alts.shape[0]):
        for c in range(alts.shape[1]):
            if alts[a, c] > cand[c] + eps:
                return True
    return False


def any_strict_dominator(const double[::1] p1, const double[::1] p2,
                         const double[::1] p3, double t1, double t2, double t3,
                         double eps):
    cdef Py_ssize_t k
    for k in range(p1.shape[0]):
        if p1[k] >= t1 and p2[k] >= t2 and p3[k] >= t3 and (
                p1[k] > t1 + eps or p2[k] > t2 + eps or p3[k] > t3 + eps):
            return True
    return False
