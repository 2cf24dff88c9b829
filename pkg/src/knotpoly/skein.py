"""Skein-recursion engines for the regular-isotopy polynomials R and D.

R is the regular-isotopy HOMFLY polynomial:

    R(unknot)             = (a - a^-1) / z
    R(L+) - R(L-)         = z * R(L0)          (oriented smoothing)
    R(positive curl)      = a * R(strand)

D is the Dubrovnik form of the Kauffman polynomial:

    D(unknot)             = (a - a^-1) / z + 1
    D(L+) - D(L-)         = z * (D(L_par) - D(L_turn))
    D(positive curl)      = a * D(strand)

where L_par keeps the strands at their levels and L_turn replaces the
crossing by a cap-cup wall.  Both are computed by resolving crossings toward
a descending diagram: along a fixed traversal every crossing met first on the
under strand is switched (collected in one telescoping pass) and the
smoothed remainders recurse with one crossing fewer.  A descending diagram
with writhe w and k components is an unlink with curls and evaluates to
a^w * delta^k (delta the unknot value).

Diagrams are planar-reduced and level-normalized before memoization.
Disjoint-union and connected-sum slices are split off and recombined
multiplicatively (R(A # B) = R(A) R(B) / delta and R(A u B) = R(A) R(B));
the splitter can be disabled to keep an independent computation path.

The writhe-normalized knot invariants are P = a^-w R and Y = a^-w D, with
e_P and e_Y their least a-degrees.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional

from .laurent import LaurentPoly, exact_divide
from .diagram import (MorseDiagram, reduce_diagram, encode_events, find_split,
                      _switch_events, _smooth_h_events, _smooth_v_events,
                      _cups_before)

# unknot values
DELTA = LaurentPoly({(-1, 1): 1, (-1, -1): -1})            # (a - a^-1)/z
DELTA_D = LaurentPoly({(-1, 1): 1, (-1, -1): -1, (0, 0): 1})
# denominators cleared: delta = (a - a^-1)/z, delta_D = (z + a - a^-1)/z
_DELTA_NUM = LaurentPoly({(0, 1): 1, (0, -1): -1})
_DELTA_D_NUM = LaurentPoly({(1, 0): 1, (0, 1): 1, (0, -1): -1})

CACHE_ENV_VAR = "KNOTPOLY_CACHE"


class SkeinCache:
    """Memo store for computed polynomials, optionally file-backed.

    The persistent file is append-only, one `hexkey<TAB>json` line per record;
    concurrent appends of identical records are harmless.
    """

    def __init__(self, path: Optional[str] = None):
        self.mem: dict[bytes, LaurentPoly] = {}
        self.hits = 0
        self.misses = 0
        self.path = path
        self._fh = None
        if path:
            if os.path.exists(path):
                with open(path, "r", encoding="ascii") as fh:
                    for line in fh:
                        line = line.strip()
                        if not line:
                            continue
                        keyhex, _, payload = line.partition("\t")
                        try:
                            self.mem[bytes.fromhex(keyhex)] = \
                                LaurentPoly.from_json(json.loads(payload))
                        except (ValueError, json.JSONDecodeError):
                            continue  # torn write; ignore the record
            self._fh = open(path, "a", encoding="ascii")

    @staticmethod
    def from_env() -> "SkeinCache":
        return SkeinCache(os.environ.get(CACHE_ENV_VAR) or None)

    def get(self, key: bytes) -> Optional[LaurentPoly]:
        val = self.mem.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key: bytes, value: LaurentPoly) -> None:
        self.mem[key] = value
        if self._fh is not None:
            self._fh.write(f"{key.hex()}\t{json.dumps(value.to_json())}\n")
            self._fh.flush()

    def hit_rate(self) -> float:
        total = self.hits + self.misses
        return self.hits / total if total else 0.0

    def close(self) -> None:
        if self._fh is not None:
            self._fh.close()
            self._fh = None


def _violations(d: MorseDiagram) -> list[tuple[int, int]]:
    """Crossings first met on the under strand, in traversal order.

    The traversal takes components in birth order, starting each at its
    first-born thread and following the flow.  Returns (crossing_number,
    oriented_sign) pairs.
    """
    ev_to_cn = {ci[0]: n for n, ci in enumerate(d.cross_info)}
    seen: set[int] = set()
    out: list[tuple[int, int]] = []
    for comp in d.components:
        start = comp  # component id is its least thread
        t = start
        while True:
            plist = d.thread_passes[t]
            east = d.dirs[t] == 1
            for ev_idx, entered_lower in (plist if east else reversed(plist)):
                if ev_idx in seen:
                    continue
                seen.add(ev_idx)
                s = d.cross_info[ev_to_cn[ev_idx]][3]
                over = (s == 1) if entered_lower else (s == -1)
                if not over:
                    cn = ev_to_cn[ev_idx]
                    out.append((cn, d.oriented_sign(cn)))
            t = d.cap_pair[t] if east else d.cup_pair[t]
            if t == start:
                break
    return out


@dataclass
class SkeinStats:
    nodes: int = 0
    cache_hits: int = 0
    cache_misses: int = 0

    def hit_rate(self) -> float:
        total = self.cache_hits + self.cache_misses
        return self.cache_hits / total if total else 0.0


def _split_dirs(events: tuple, dirs: tuple, pos: int, kind: int):
    """Split events (and orientation) at a 0- or 2-strand slice."""
    ncups1 = sum(1 for e in events[:pos] if e[0] == "cup")
    if kind == 0:
        return (events[:pos], dirs[:2 * ncups1] if dirs else None,
                events[pos:], dirs[2 * ncups1:] if dirs else None)
    # connected-sum slice: close the prefix with a cap, reopen with a cup
    e1 = events[:pos] + (("cap", 0),)
    e2 = (("cup", 0),) + events[pos:]
    if dirs is None:
        return e1, None, e2, None
    active: list[int] = []
    tid = 0
    for e in events[:pos]:
        if e[0] == "cup":
            active[e[1]:e[1]] = [tid, tid + 1]
            tid += 2
        elif e[0] == "cap":
            del active[e[1]:e[1] + 2]
        else:
            i = e[1]
            active[i], active[i + 1] = active[i + 1], active[i]
    lo, hi = active
    d2 = (dirs[lo], dirs[hi]) + dirs[2 * ncups1:]
    return e1, dirs[:2 * ncups1], e2, d2


def _descending_value(events: tuple, dirs: Optional[tuple],
                      unknot_num: LaurentPoly) -> LaurentPoly:
    d = MorseDiagram(events, dirs)
    k = len(d.components)
    # value = a^w * (unknot_num / z)^k
    val = unknot_num ** k
    return val.shift(-k, d.writhe)


def _skein_eval(events: tuple, dirs: Optional[tuple], *, kauffman: bool,
                cache: SkeinCache, stats: Optional[SkeinStats],
                allow_split: bool) -> LaurentPoly:
    events, dirs, a_pow, circles = reduce_diagram(events, dirs)
    unknot_num = _DELTA_D_NUM if kauffman else _DELTA_NUM
    mult = (unknot_num ** circles).shift(-circles, a_pow)
    if not events:
        return mult
    if stats is not None:
        stats.nodes += 1
    key = (b"D" if kauffman else b"R") + encode_events(events, dirs)
    cached = cache.get(key)
    if stats is not None:
        if cached is None:
            stats.cache_misses += 1
        else:
            stats.cache_hits += 1
    if cached is not None:
        return mult * cached

    val: Optional[LaurentPoly] = None
    if allow_split:
        sp = find_split(events)
        if sp is not None:
            pos, kind = sp
            e1, d1, e2, d2 = _split_dirs(events, dirs, pos, kind)
            v1 = _skein_eval(e1, d1, kauffman=kauffman, cache=cache,
                             stats=stats, allow_split=allow_split)
            v2 = _skein_eval(e2, d2, kauffman=kauffman, cache=cache,
                             stats=stats, allow_split=allow_split)
            prod = v1 * v2
            if kind == 0:
                val = prod
            else:
                q = exact_divide(prod.shift(1, 0), unknot_num, "second")
                if q is None:
                    raise AssertionError("connected-sum factor not divisible")
                val = q

    if val is None:
        d = MorseDiagram(events, dirs)
        use_dirs = d.dirs
        viols = _violations(d)
        cur = events
        acc = LaurentPoly()
        for cn, eps in viols:
            ev_idx, lo, hi, s = d.cross_info[cn]
            if kauffman:
                h = _skein_eval(_smooth_h_events(cur, ev_idx), None,
                                kauffman=True, cache=cache, stats=stats,
                                allow_split=allow_split)
                v = _skein_eval(_smooth_v_events(cur, ev_idx), None,
                                kauffman=True, cache=cache, stats=stats,
                                allow_split=allow_split)
                acc = acc + (h - v).shift(1, 0) * s
            else:
                if use_dirs[lo] * use_dirs[hi] == 1:
                    sm_ev, sm_dirs = _smooth_h_events(cur, ev_idx), dirs
                else:
                    sm_ev = _smooth_v_events(cur, ev_idx)
                    pos = 2 * _cups_before(cur, ev_idx)
                    sm_dirs = dirs[:pos] + (use_dirs[hi], use_dirs[lo]) + dirs[pos:]
                sm = _skein_eval(sm_ev, sm_dirs, kauffman=False, cache=cache,
                                 stats=stats, allow_split=allow_split)
                acc = acc + sm.shift(1, 0) * eps
            cur = _switch_events(cur, ev_idx)
        val = _descending_value(cur, dirs, unknot_num) + acc

    cache.put(key, val)
    return mult * val


def homfly_R(d: MorseDiagram, cache: Optional[SkeinCache] = None,
             stats: Optional[SkeinStats] = None,
             allow_split: bool = True) -> LaurentPoly:
    """Regular-isotopy HOMFLY polynomial of an oriented closed diagram."""
    if cache is None:
        cache = SkeinCache.from_env()
    return _skein_eval(d.events, d.dirs, kauffman=False, cache=cache,
                       stats=stats, allow_split=allow_split)


def kauffman_D(d: MorseDiagram, cache: Optional[SkeinCache] = None,
               stats: Optional[SkeinStats] = None,
               allow_split: bool = True) -> LaurentPoly:
    """Regular-isotopy Dubrovnik polynomial; orientation is ignored."""
    if cache is None:
        cache = SkeinCache.from_env()
    return _skein_eval(d.events, None, kauffman=True, cache=cache,
                       stats=stats, allow_split=allow_split)


@dataclass
class SkeinResult:
    R: LaurentPoly
    D: LaurentPoly
    P: LaurentPoly
    Y: LaurentPoly
    e_P: int
    e_Y: int
    w: int

    def to_json(self) -> dict:
        return {"w": self.w, "e_P": self.e_P, "e_Y": self.e_Y,
                "R": self.R.to_json(), "D": self.D.to_json(),
                "P": self.P.to_json(), "Y": self.Y.to_json()}


def full_invariants(d: MorseDiagram, cache: Optional[SkeinCache] = None,
                    stats: Optional[SkeinStats] = None,
                    allow_split: bool = True) -> SkeinResult:
    """R, D and the writhe-normalized P, Y with their least a-degrees."""
    if cache is None:
        cache = SkeinCache.from_env()
    R = homfly_R(d, cache, stats, allow_split)
    D = kauffman_D(d, cache, stats, allow_split)
    w = d.writhe
    P = R.shift(0, -w)
    Y = D.shift(0, -w)
    return SkeinResult(R=R, D=D, P=P, Y=Y,
                       e_P=P.min_degree("second"), e_Y=Y.min_degree("second"),
                       w=w)
