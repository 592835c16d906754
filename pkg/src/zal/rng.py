"""Counter-based uniforms: draw i depends only on (seed, stream, i).

Philox produces four 64-bit words per counter step, and ``Generator.random``
consumes one word per double, so index ``i`` sits at counter ``i // 4``,
word ``i % 4``. Any slice of the sequence can therefore be produced
independently, which keeps chunked or parallel runs bit-identical to serial ones.
"""
import numpy as np

STREAMS = {"tau": 0, "pairs": 1, "calibration": 2, "mean-value": 3, "synthetic": 4, "residual": 5}


def _key(seed, stream):
    if not 0 <= int(seed) < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return int(seed) | (int(stream) << 64)


def uniforms(seed, start, count, stream=0):
    """Draws ``start .. start+count-1`` of the (seed, stream) sequence, in [0, 1)."""
    if isinstance(stream, str):
        stream = STREAMS[stream]
    bg = np.random.Philox(key=_key(seed, stream))
    bg.advance(start // 4)
    gen = np.random.Generator(bg)
    if start % 4:
        gen.random(start % 4)
    return gen.random(count)
