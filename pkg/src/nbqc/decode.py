"""Layered Min-Max decoding over a BPSK/AWGN channel.

Messages are q-entry numpy vectors of non-negative reliabilities indexed
by the polynomial-bit value of the field element; every message leaving an
operation is normalized so its minimum entry is exactly 0 (the most likely
symbol has reliability 0).  The check node uses the min-max kernel
C(a) = min over b+c=a of max(A(b), B(c)), combined forward/backward; a
brute-force enumeration oracle defines ground truth for it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .construct import ParityCheck
from .gf import GF2m

LAYER_I = "layer1"
LAYER_II = "layer2"

FORWARD = "forward"
BACKWARD = "backward"

#: reliability assigned to non-transmitted symbols by the noiseless channel
HARD_PENALTY = 1e6


@dataclass(frozen=True)
class LayerSchedule:
    partition: str
    layers: tuple[tuple[int, ...], ...]
    heights: int  # rows per layer


@dataclass(frozen=True)
class DecoderConfig:
    max_iter: int = 10
    quant: tuple[int, int] | None = None  # (b_q, b_f)
    rng_seed: int = 0
    early_stop: bool = True
    trace: bool = False

    def __post_init__(self) -> None:
        if self.quant is not None:
            b_q, b_f = self.quant
            if not b_f < b_q:
                raise ValueError(f"quantization requires b_f < b_q, got ({b_q}, {b_f})")


@dataclass
class DecodeResult:
    symbols: np.ndarray
    iterations: int
    syndrome_zero: bool
    trace: list[np.ndarray] = field(default_factory=list, repr=False)


def normalize(vec: np.ndarray) -> np.ndarray:
    return vec - vec.min()


def build_layer_schedule(h: ParityCheck, partition: str) -> LayerSchedule:
    """Partition H's rows into layers.

    LAYER_I: one layer per CPM block row (q-1 rows each); LAYER_II: one
    singleton layer per row.  Validates that no column appears twice
    within a layer.
    """
    qm1 = h.q - 1
    if partition == LAYER_I:
        layers = tuple(
            tuple(range(b * qm1, (b + 1) * qm1)) for b in range(h.num_block_rows)
        )
        heights = qm1
    elif partition == LAYER_II:
        layers = tuple((r,) for r in range(h.rows))
        heights = 1
    else:
        raise ValueError(f"unknown partition {partition!r}")
    for layer in layers:
        seen: set[int] = set()
        for r in layer:
            for c, _ in h.row_entries[r]:
                if c in seen:
                    raise ValueError(f"column {c} appears twice in one layer")
                seen.add(c)
    return LayerSchedule(partition, layers, heights)


def symbol_bits(a: int, m: int) -> list[int]:
    return [(a >> i) & 1 for i in range(m)]


def channel_reliability(
    tx_symbols, sigma: float, fld: GF2m, rng: np.random.Generator
) -> list[np.ndarray]:
    """BPSK-modulate each symbol's m bits, add AWGN, build reliabilities.

    L_v(a) = sum over bits of |LLR_i| where bit i of a disagrees with the
    hard decision; normalized so the hard-decision symbol scores 0.
    """
    if sigma <= 0:
        raise ValueError(f"noise std must be positive, got {sigma}")
    m, q = fld.m, fld.q
    # bit_table[a, i] = bit i of symbol a
    bit_table = (np.arange(q)[:, None] >> np.arange(m)[None, :]) & 1
    out = []
    for sym in tx_symbols:
        bits = np.array(symbol_bits(int(sym), m))
        y = (1.0 - 2.0 * bits) + sigma * rng.standard_normal(m)
        mag = np.abs(2.0 * y / sigma**2)
        hard = (y < 0).astype(int)
        vec = ((bit_table != hard[None, :]) * mag[None, :]).sum(axis=1)
        out.append(normalize(vec))
    return out


def hard_channel(tx_symbols, fld: GF2m, penalty: float = HARD_PENALTY) -> list[np.ndarray]:
    """Noiseless limit: transmitted symbol gets 0, every other symbol `penalty`."""
    out = []
    for sym in tx_symbols:
        vec = np.full(fld.q, penalty)
        vec[int(sym)] = 0.0
        out.append(vec)
    return out


def permute_message(msg: np.ndarray, h: int, direction: str, fld: GF2m) -> np.ndarray:
    """Edge-label action on a message.

    Forward maps out[a] = msg[h^-1 * a] so the check constraint becomes an
    unweighted sum; backward is the inverse.  Composing both is identity.
    """
    if h == 0:
        raise ValueError("edge label must be nonzero")
    if direction == FORWARD:
        g = fld.inv(h)
    elif direction == BACKWARD:
        g = h
    else:
        raise ValueError(f"unknown direction {direction!r}")
    idx = np.fromiter((fld.mul(g, a) for a in range(fld.q)), dtype=np.intp, count=fld.q)
    return msg[idx]


def _minmax_kernel(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """C[x] = min over y of max(a[y], b[x XOR y]); XOR is GF(2^m) addition."""
    q = len(a)
    idx = np.arange(q)
    out = np.full(q, np.inf)
    for y in range(q):
        np.minimum(out, np.maximum(a[y], b[idx ^ y]), out=out)
    return out


def check_node_min_max(inputs: list[np.ndarray]) -> list[np.ndarray]:
    """Min-Max check node update by forward-backward kernel combination.

    Operates on the permuted domain (zero-sum constraint); output i is the
    min-max combination of all inputs except i, re-normalized to min 0.
    """
    d = len(inputs)
    if d < 2:
        raise ValueError(f"check degree must be >= 2, got {d}")
    if d == 2:
        return [normalize(inputs[1].copy()), normalize(inputs[0].copy())]
    fwd = [inputs[0]]
    for i in range(1, d - 1):
        fwd.append(_minmax_kernel(fwd[-1], inputs[i]))
    bwd = [inputs[d - 1]]
    for i in range(d - 2, 0, -1):
        bwd.append(_minmax_kernel(inputs[i], bwd[-1]))
    bwd.reverse()  # bwd[i] combines inputs i+1..d-1
    outs = [normalize(bwd[0])]
    for i in range(1, d - 1):
        outs.append(normalize(_minmax_kernel(fwd[i - 1], bwd[i])))
    outs.append(normalize(fwd[d - 2]))
    return outs


def check_node_brute_force(inputs: list[np.ndarray]) -> list[np.ndarray]:
    """Direct enumeration of all satisfying configurations (oracle)."""
    d = len(inputs)
    if d < 2:
        raise ValueError(f"check degree must be >= 2, got {d}")
    q = len(inputs[0])
    if q ** (d - 1) > 1 << 20:
        raise ValueError(f"enumeration guard exceeded: {q}^{d - 1} configurations")
    outs = []
    for i in range(d):
        others = [j for j in range(d) if j != i]
        agg_max = np.zeros((1,) * len(others))
        agg_xor = np.zeros((1,) * len(others), dtype=np.intp)
        for ax, j in enumerate(others):
            shape = [1] * len(others)
            shape[ax] = q
            agg_max = np.maximum(agg_max, inputs[j].reshape(shape))
            agg_xor = agg_xor ^ np.arange(q).reshape(shape)
        out = np.full(q, np.inf)
        np.minimum.at(out, agg_xor.ravel(), agg_max.ravel())
        outs.append(normalize(out))
    return outs


def quantize(x: float, b_q: int, b_f: int) -> float:
    """Unsigned (b_q, b_f) uniform quantization: round to nearest multiple
    of 2^-b_f (ties up), saturating at (2^b_q - 1) * 2^-b_f."""
    step = 2.0 ** (-b_f)
    top = (2**b_q - 1) * step
    val = np.floor(x / step + 0.5) * step
    return float(min(val, top))


def quantize_vec(vec: np.ndarray, quant: tuple[int, int]) -> np.ndarray:
    b_q, b_f = quant
    step = 2.0 ** (-b_f)
    top = (2**b_q - 1) * step
    return np.minimum(np.floor(vec / step + 0.5) * step, top)


def process_row(
    entries: list[tuple[int, int]],
    get_msg,
    set_msg,
    r_store: dict[int, np.ndarray],
    fld: GF2m,
    quant: tuple[int, int] | None,
) -> None:
    """One check-row update: subtract stored check messages, permute, run
    the min-max check node, de-permute, add back.

    Message access is abstracted through get_msg/set_msg so the same
    arithmetic serves both direct-indexed and physically-shuffled decoders.
    """
    l_cv = {}
    for v, h in entries:
        x = normalize(get_msg(v) - r_store[v])
        if quant:
            x = quantize_vec(x, quant)
        l_cv[v] = x
    ins = [permute_message(l_cv[v], h, FORWARD, fld) for v, h in entries]
    outs = check_node_min_max(ins)
    for (v, h), out in zip(entries, outs):
        r_new = permute_message(out, h, BACKWARD, fld)
        if quant:
            r_new = quantize_vec(r_new, quant)
        r_store[v] = r_new
        post = normalize(l_cv[v] + r_new)
        if quant:
            post = quantize_vec(post, quant)
        set_msg(v, post)


def hard_decision(posteriors: list[np.ndarray]) -> np.ndarray:
    """argmin per symbol; ties break toward the smaller element index."""
    return np.array([int(np.argmin(p)) for p in posteriors])


def syndrome_zero(h: ParityCheck, fld: GF2m, symbols: np.ndarray) -> bool:
    for entries in h.row_entries:
        acc = 0
        for c, v in entries:
            acc ^= fld.mul(v, int(symbols[c]))
        if acc != 0:
            return False
    return True


def decode(
    h: ParityCheck,
    schedule: LayerSchedule,
    channel: list[np.ndarray],
    fld: GF2m,
    config: DecoderConfig,
) -> DecodeResult:
    """Layered Min-Max decoding, layers processed top to bottom."""
    if len(channel) != h.cols:
        raise ValueError(f"expected {h.cols} channel messages, got {len(channel)}")
    posteriors = [normalize(ch.astype(float)) for ch in channel]
    r_store: list[dict[int, np.ndarray]] = [
        {v: np.zeros(fld.q) for v, _ in h.row_entries[r]} for r in range(h.rows)
    ]
    trace: list[np.ndarray] = []
    iterations = 0
    for _ in range(config.max_iter):
        for layer in schedule.layers:
            for r in layer:
                process_row(
                    h.row_entries[r],
                    lambda v: posteriors[v],
                    lambda v, msg: posteriors.__setitem__(v, msg),
                    r_store[r],
                    fld,
                    config.quant,
                )
            if config.trace:
                trace.append(np.stack(posteriors))
        iterations += 1
        if config.early_stop and syndrome_zero(h, fld, hard_decision(posteriors)):
            break
    symbols = hard_decision(posteriors)
    return DecodeResult(symbols, iterations, syndrome_zero(h, fld, symbols), trace)


@dataclass(frozen=True)
class SimResultRow:
    snr_db: float
    trials: int
    frame_errors: int
    symbol_errors: int
    fer: float
    ber: float
    avg_iters: float

    CSV_HEADER = "snr_db,trials,frame_errors,symbol_errors,fer,ber,avg_iters"

    def csv(self) -> str:
        return (
            f"{self.snr_db!r},{self.trials},{self.frame_errors},{self.symbol_errors},"
            f"{self.fer!r},{self.ber!r},{self.avg_iters!r}"
        )


def _run_trial(args) -> tuple[int, int, int, int]:
    h, schedule, fld, sigma, config, seed_key = args
    rng = np.random.default_rng(np.random.SeedSequence(config.rng_seed, spawn_key=seed_key))
    tx = np.zeros(h.cols, dtype=int)  # all-zero codeword
    channel = channel_reliability(tx, sigma, fld, rng)
    result = decode(h, schedule, channel, fld, config)
    sym_err = int(np.count_nonzero(result.symbols))
    bit_err = sum(bin(int(s)).count("1") for s in result.symbols)
    return (1 if sym_err else 0, sym_err, bit_err, result.iterations)


def snr_to_sigma(snr_db: float, rate: float, m: int) -> float:
    """Eb/N0 in dB to per-bit AWGN noise std for unit-energy BPSK."""
    return float(1.0 / np.sqrt(2.0 * rate * 10.0 ** (snr_db / 10.0)))


def run_monte_carlo(
    h: ParityCheck,
    schedule: LayerSchedule,
    fld: GF2m,
    snr_db_list: list[float],
    trials: int,
    config: DecoderConfig,
    workers: int = 1,
) -> list[SimResultRow]:
    """All-zero-codeword FER/BER sweep; bit-reproducible for a fixed seed
    regardless of worker count (one derived seed per trial index)."""
    if not snr_db_list:
        raise ValueError("empty SNR list")
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    rate = (h.cols - h.rows) / h.cols
    rows = []
    for si, snr_db in enumerate(snr_db_list):
        sigma = snr_to_sigma(snr_db, rate, fld.m)
        jobs = [(h, schedule, fld, sigma, config, (si, t)) for t in range(trials)]
        if workers > 1:
            import multiprocessing

            with multiprocessing.Pool(workers) as pool:
                results = pool.map(_run_trial, jobs)
        else:
            results = [_run_trial(j) for j in jobs]
        fe = sum(r[0] for r in results)
        se = sum(r[1] for r in results)
        be = sum(r[2] for r in results)
        iters = sum(r[3] for r in results)
        rows.append(
            SimResultRow(
                snr_db=snr_db,
                trials=trials,
                frame_errors=fe,
                symbol_errors=se,
                fer=fe / trials,
                ber=be / (trials * h.cols * fld.m),
                avg_iters=iters / trials,
            )
        )
    return rows


def check_node_brute_force_loop(inputs: list[np.ndarray]) -> list[np.ndarray]:
    """Scalar-loop variant of the enumeration oracle (small cases only)."""
    d = len(inputs)
    q = len(inputs[0])
    if q ** (d - 1) > 1 << 16:
        raise ValueError("loop oracle guard exceeded")
    outs = []
    for i in range(d):
        others = [j for j in range(d) if j != i]
        out = [np.inf] * q
        for combo in itertools.product(range(q), repeat=len(others)):
            a = 0
            m = 0.0
            for j, aj in zip(others, combo):
                a ^= aj
                m = max(m, float(inputs[j][aj]))
            out[a] = min(out[a], m)
        outs.append(normalize(np.array(out)))
    return outs
