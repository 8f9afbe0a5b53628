"""Pure-Python simulation kernel.

Must produce bit-identical output to the compiled ``_ckernel`` module: same
generator (xoshiro256** seeded through splitmix64), same rejection rule, same
draw order.
"""

MASK = 0xFFFFFFFFFFFFFFFF


def seed_state(seed):
    """Expand a 64-bit seed into four xoshiro256** state words via splitmix64."""
    x = seed & MASK
    words = []
    for _ in range(4):
        x = (x + 0x9E3779B97F4A7C15) & MASK
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        words.append(z ^ (z >> 31))
    return words


def random_u64(state, count):
    """First ``count`` raw outputs of the generator (used to pin the stream in tests)."""
    s0, s1, s2, s3 = state
    out = []
    for _ in range(count):
        x = (s1 * 5) & MASK
        out.append((((x << 7) | (x >> 57)) & MASK) * 9 & MASK)
        t = (s1 << 17) & MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & MASK
    return out


def simulate_carries(base, addends, columns, seed):
    """Carries kappa_0 = 0, kappa_1, ..., kappa_columns of random base-``base`` addition.

    Each digit is ``x % base`` for the first generator output ``x`` with
    ``x >= 2**64 % base``; the accepted range is a multiple of ``base`` long,
    so digits are exactly uniform.
    """
    s0, s1, s2, s3 = seed_state(seed)
    reject_below = (1 << 64) % base
    carry = 0
    out = [0] * (columns + 1)
    for t in range(1, columns + 1):
        total = carry
        drawn = 0
        while drawn < addends:
            x = (s1 * 5) & MASK
            r = (((x << 7) | (x >> 57)) & MASK) * 9 & MASK
            u = (s1 << 17) & MASK
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= u
            s3 = ((s3 << 45) | (s3 >> 19)) & MASK
            if r >= reject_below:
                total += r % base
                drawn += 1
        carry = total // base
        out[t] = carry
    return out


def count_transitions(carries, states):
    counts = [[0] * states for _ in range(states)]
    prev = carries[0]
    for c in carries[1:]:
        counts[prev][c] += 1
        prev = c
    return counts
