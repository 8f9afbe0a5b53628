# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled simulation kernel. Bit-identical to ``_pykernel``."""

from libc.stdint cimport uint64_t, int32_t
from libc.stdlib cimport malloc, free


cdef inline uint64_t rotl(uint64_t x, int k) nogil:
    return (x << k) | (x >> (64 - k))


cdef inline uint64_t next_u64(uint64_t* s) nogil:
    cdef uint64_t result = rotl(s[1] * 5, 7) * 9
    cdef uint64_t t = s[1] << 17
    s[2] ^= s[0]
    s[3] ^= s[1]
    s[1] ^= s[2]
    s[0] ^= s[3]
    s[2] ^= t
    s[3] = rotl(s[3], 45)
    return result


cdef void seed_words(uint64_t seed, uint64_t* s) nogil:
    cdef uint64_t x = seed
    cdef uint64_t z
    cdef int i
    for i in range(4):
        x += 0x9E3779B97F4A7C15ULL
        z = x
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
        s[i] = z ^ (z >> 31)


def seed_state(seed):
    cdef uint64_t s[4]
    seed_words(<uint64_t>(seed & 0xFFFFFFFFFFFFFFFF), s)
    return [s[0], s[1], s[2], s[3]]


def random_u64(state, Py_ssize_t count):
    cdef uint64_t s[4]
    cdef Py_ssize_t i
    for i in range(4):
        s[i] = <uint64_t>state[i]
    return [next_u64(s) for i in range(count)]


def simulate_carries(uint64_t base, Py_ssize_t addends, Py_ssize_t columns, seed):
    cdef uint64_t s[4]
    cdef uint64_t reject_below, r, total, carry = 0
    cdef Py_ssize_t t, drawn
    cdef int32_t* buf = <int32_t*> malloc((columns + 1) * sizeof(int32_t))
    if buf == NULL:
        raise MemoryError()
    seed_words(<uint64_t>(seed & 0xFFFFFFFFFFFFFFFF), s)
    # 2**64 mod base, computed in 64-bit arithmetic
    reject_below = (<uint64_t>0 - base) % base
    try:
        with nogil:
            buf[0] = 0
            for t in range(1, columns + 1):
                total = carry
                drawn = 0
                while drawn < addends:
                    r = next_u64(s)
                    if r >= reject_below:
                        total += r % base
                        drawn += 1
                carry = total // base
                buf[t] = <int32_t>carry
        return [buf[t] for t in range(columns + 1)]
    finally:
        free(buf)


def count_transitions(carries, Py_ssize_t states):
    cdef Py_ssize_t n = len(carries)
    cdef Py_ssize_t i, prev, cur
    cdef Py_ssize_t* counts = <Py_ssize_t*> malloc(states * states * sizeof(Py_ssize_t))
    if counts == NULL:
        raise MemoryError()
    try:
        for i in range(states * states):
            counts[i] = 0
        prev = carries[0]
        for i in range(1, n):
            cur = carries[i]
            if cur < 0 or cur >= states or prev < 0 or prev >= states:
                raise ValueError(f"carry value out of range 0..{states - 1}")
            counts[prev * states + cur] += 1
            prev = cur
        return [[counts[i * states + j] for j in range(states)] for i in range(states)]
    finally:
        free(counts)
