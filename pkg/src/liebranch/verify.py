"""Verification suites: every identity recomputed and compared with its expected value.

A suite is a list of :class:`Task` objects, each naming a module-level
function and its arguments, so suites can fan out over worker processes.
Results come back as a :class:`VerificationReport` whose checks are sorted
by identifier; apart from the duration field the rendered output depends
only on the configuration.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable

from . import __version__
from . import branching as br
from . import dualpair as dp
from . import invariants as inv
from . import quaternionic as qk
from .characters import sym_power_character

PROVENANCE = ("PAPER", "DERIVED", "TRIVIAL")
ENV_PREFIX = "LIEBRANCH_"


@dataclass(frozen=True)
class Config:
    depth_e6: int = 10
    depth_e7: int = 10
    depth_e8: int = 6
    depth_lemma: int = 6
    depth_oracle: int = 5
    depth_e8_oracle: int = 4
    jobs: int = 1

    @classmethod
    def from_env(cls, environ: dict | None = None, **overrides) -> "Config":
        """Defaults, then ``LIEBRANCH_*`` variables, then explicit overrides."""
        env = os.environ if environ is None else environ
        values: dict[str, int] = {}
        for name in cls.__dataclass_fields__:
            raw = env.get(ENV_PREFIX + name.upper())
            if raw is not None:
                try:
                    values[name] = int(raw)
                except ValueError:
                    raise ValueError(f"{ENV_PREFIX + name.upper()} must be an integer, got {raw!r}") from None
        values.update({k: v for k, v in overrides.items() if v is not None})
        cfg = cls(**values)
        for name, v in asdict(cfg).items():
            if v < (1 if name == "jobs" else 0):
                raise ValueError(f"{name} out of range: {v}")
        return cfg


@dataclass(frozen=True)
class Check:
    identifier: str
    expected: Any
    computed: Any
    status: str
    provenance: str
    case: str = ""
    n: int | str = ""
    method: str = ""
    note: str = ""


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check]
    duration: float
    config: Config
    version: str = __version__

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status != "pass"]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "version": self.version,
            "config": asdict(self.config),
            "status": "pass" if self.ok else "fail",
            "duration_s": round(self.duration, 3),
            "checks": [{k: _jsonable(v) for k, v in asdict(c).items()} for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["case", "n", "method", "value", "status"])
        for c in self.checks:
            w.writerow([c.case or c.identifier, c.n, c.method, _fmt(c.computed), c.status])
        return buf.getvalue()

    def to_text(self) -> str:
        width = max((len(c.identifier) for c in self.checks), default=10)
        lines = [f"suite {self.suite}  (liebranch {self.version})"]
        for c in self.checks:
            tag = "PASS" if c.status == "pass" else "FAIL"
            line = f"{tag}  {c.identifier:<{width}}  expected={_fmt(c.expected)}  computed={_fmt(c.computed)}  [{c.provenance}]"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        n_fail = len(self.failures)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed in {self.duration:.2f} s")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    if v is None:
        return "-"
    return str(v)


# -- tasks -----------------------------------------------------------------


@dataclass(frozen=True)
class Task:
    identifier: str
    provenance: str
    fn: Callable
    args: tuple = ()
    expected: Any = None
    case: str = ""
    n: int | str = ""
    method: str = ""
    compare: str = "eq"  # "eq", or "record" for values without an expected counterpart
    note: str = ""

    def __post_init__(self):
        if self.provenance not in PROVENANCE:
            raise ValueError(f"bad provenance {self.provenance}")


def _run_task(task: Task) -> Check:
    try:
        computed = task.fn(*task.args)
        if task.compare == "record":
            status = "pass"
        else:
            status = "pass" if computed == task.expected else "fail"
        note = task.note
    except Exception as exc:  # reported, never raised
        computed, status, note = None, "fail", f"{type(exc).__name__}: {exc}"
    return Check(
        task.identifier,
        task.expected,
        computed,
        status,
        task.provenance,
        task.case,
        task.n,
        task.method,
        note,
    )


def run_tasks(suite: str, tasks: list[Task], config: Config) -> VerificationReport:
    start = time.perf_counter()
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            checks = list(pool.map(_run_task, tasks, chunksize=1))
    else:
        checks = [_run_task(t) for t in tasks]
    checks.sort(key=lambda c: c.identifier)
    ids = [c.identifier for c in checks]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate check identifiers")
    return VerificationReport(suite, checks, time.perf_counter() - start, config)


def _nn(n: int) -> str:
    return f"{n:02d}"


# -- helpers run inside tasks (module level so they pickle) -------------------


def restricted_summary(name: str) -> tuple:
    d = dp.restricted_root_data(dp.PRESETS[name])
    return (str(d.identified_type), d.long_mult, d.short_mult)


def accounting_holds(name: str) -> tuple[int, int]:
    return dp.restricted_root_data(dp.PRESETS[name]).accounting()


def centralizer_summary(name: str) -> tuple:
    d = dp.restricted_root_data(dp.PRESETS[name])
    return (" x ".join(str(t) for t in d.centralizer_type), d.centralizer_dim)


def ambient_p(label: str) -> Fraction:
    return dp.ambient_exponent(label)


def restricted_p(name: str) -> Fraction:
    return dp.restricted_exponent(dp.PRESETS[name]).p


def levi_agrees(kind: str, m: int, n: int) -> tuple[bool, bool]:
    """(closed form equals oracle, oracle is multiplicity free)."""
    oracle = br._levi_oracle(kind, m, n)
    return oracle == br.levi_rule_as_decomposition(kind, m, n), oracle.is_multiplicity_free


_LEVI_SHIFT = {
    "sp": lambda m: (1,) * m,
    "gl": lambda m: (1,) * m + (0,) * m,
    "spin": lambda m: (Fraction(1, 2),) * (2 * m),
}


def _levi_list(kind: str, m: int, n: int) -> list[tuple]:
    if kind == "gl":
        return [a + b for a, b in br.branch_gl_to_gl_gl(m, n)]
    return {"sp": br.branch_sp_to_gl, "spin": br.branch_spin_to_gl}[kind](m, n)


def levi_source_dim(kind: str, m: int, n: int) -> int:
    from .roots import CartanType, build_root_system, gl

    if kind == "sp":
        return build_root_system(CartanType("C", m)).weyl_dim([n] * m)
    if kind == "gl":
        return gl(2 * m).weyl_dim([n] * m + [0] * m)
    return build_root_system(CartanType("D", 2 * m)).weyl_dim([Fraction(n, 2)] * (2 * m))


def levi_dims(kind: str, m: int, n: int) -> tuple[int, int]:
    """(sum of constituent dimensions, dimension of the branched module)."""
    dec = br.levi_rule_as_decomposition(kind, m, n)
    return dec.dimension, levi_source_dim(kind, m, n)


def levi_monotone(kind: str, m: int, n: int) -> bool:
    """The list at n-1, shifted by one fundamental weight, sits inside the list at n."""
    shift = _LEVI_SHIFT[kind](m)
    upper = {tuple(Fraction(x) for x in w) for w in _levi_list(kind, m, n)}
    lower = [tuple(Fraction(x) + s for x, s in zip(w, shift)) for w in _levi_list(kind, m, n - 1)]
    return all(w in upper for w in lower)


def r1_dimension_formula(depth: int) -> bool:
    d = qk.f44_datum(6)
    for t in qk.r1_ktypes(d, depth):
        expected = (d.k + t.n - 1) * sym_power_character(d.n_m_rep, t.n).dimension * d.m_rep.dimension
        if t.dimension != expected:
            return False
    return True


def mintype_sp8(n: int) -> dict:
    return br.branch_sp8_mintype_su2l_oracle(n)


def mintype_su8(n: int) -> dict:
    return br.branch_su8_mintype_su2l_oracle(n)


def vn0_sp6(n: int) -> dict:
    return br.branch_Vn0_to_sp6_oracle(n)


def telescoped(n: int) -> int:
    return sum(inv.sp6_su2s_invariants_oracle(c) for c in range(n + 1))


def exact_sequence_min(depth: int) -> int:
    """Smallest multiplicity over all levels (the computation raises on negatives)."""
    diff = qk.exact_sequence_ktype_diff(qk.f44_datum(6), qk.f44_datum(10), depth)
    return min(min(d.table.values()) for d in diff.values())


def exact_sequence_level(depth: int, level: int) -> int:
    diff = qk.exact_sequence_ktype_diff(qk.f44_datum(6), qk.f44_datum(10), depth)
    return diff[level].dimension


def ktype_identity(n: int) -> bool:
    left, right = qk.seesaw_ktype_identity(n)
    return left == right


def n_strings_enumerated(n: int) -> int:
    return inv.n_string_count(n)[0]


def kprime_e8_oracle(n: int) -> int:
    return inv.dim_invariants_Kprime("E8", n, "oracle")


def kprime_e7_closed(n: int) -> int:
    return comb(n + 11, 11) - comb(n + 7, 11)


# -- expected values -------------------------------------------------------

P_H = {"E6": Fraction(8), "E7": Fraction(9), "E8": Fraction(29, 3)}
P_FIRST = dict(zip(dp.FIRST_FAMILY, (Fraction(1), Fraction(2), Fraction(8, 3))))
P_SECOND = dict(zip(dp.SECOND_FAMILY, (Fraction(2), Fraction(3, 2), Fraction(1))))
RESTRICTED = {
    "E6-A2": ("A2", None, 8),
    "E7-C3": ("C3", 1, 8),
    "E8-F4": ("F4", 1, 8),
    "E6-G2": ("G2", 1, 9),
    "E7-G2": ("G2", 1, 15),
    "E8-G2": ("G2", 1, 27),
}
AMBIENT_DIM = {"E6": 78, "E7": 133, "E8": 248}


# -- suites ----------------------------------------------------------------


def tables_tasks() -> list[Task]:
    tasks = []
    for label, p in P_H.items():
        tasks.append(Task(f"exponent.p_H.{label}", "PAPER", ambient_p, (label,), p, label, "", "p_H"))
    for name, p in {**P_FIRST, **P_SECOND}.items():
        tasks.append(Task(f"exponent.p.{name}", "PAPER", restricted_p, (name,), p, name, "", "p"))
    for name, exp in RESTRICTED.items():
        tasks.append(Task(f"restricted.{name}.type_mults", "PAPER", restricted_summary, (name,), exp, name, "", "type"))
        dim = AMBIENT_DIM[name[:2]]
        tasks.append(
            Task(f"restricted.{name}.accounting", "TRIVIAL", accounting_holds, (name,), (dim, dim), name, "", "dim")
        )
    for name in dp.FIRST_FAMILY:
        tasks.append(
            Task(f"restricted.{name}.centralizer", "PAPER", centralizer_summary, (name,), ("D4", 28), name, "", "centralizer")
        )
    return tasks


def identities_tasks(cfg: Config) -> list[Task]:
    tasks: list[Task] = []
    depths = {"E6": cfg.depth_e6, "E7": cfg.depth_e7, "E8": cfg.depth_e8}
    # K~ invariants against n-strings
    for label, depth in depths.items():
        for n in range(depth + 1):
            tasks.append(
                Task(f"ktilde.{label}.n{_nn(n)}", "PAPER", inv.dim_invariants_Ktilde, (label, n), comb(n + 7, 7), label, n, "case")
            )
    for n in range(max(depths.values()) + 1):
        tasks.append(Task(f"nstring.n{_nn(n)}", "TRIVIAL", n_strings_enumerated, (n,), comb(n + 7, 7), "nstring", n, "enumerate"))
    # K' invariants
    for label, depth in (("E6", cfg.depth_e6), ("E7", cfg.depth_e7)):
        for n in range(depth + 1):
            closed = comb(n + 4, 4) if label == "E6" else kprime_e7_closed(n)
            for method in ("closed", "chain"):
                tasks.append(
                    Task(f"kprime.{label}.{method}.n{_nn(n)}", "PAPER", inv.dim_invariants_Kprime, (label, n, method), closed, label, n, method)
                )
            if n <= cfg.depth_oracle:
                tasks.append(
                    Task(f"kprime.{label}.oracle.n{_nn(n)}", "DERIVED", inv.dim_invariants_Kprime, (label, n, "oracle"), closed, label, n, "oracle")
                )
    # SU(2)_s grid, see-saw and symmetry
    for a in range(cfg.depth_lemma + 1):
        for b in range(cfg.depth_lemma + 1 - a):
            closed = inv.su2s_invariants_closed(a, b)
            tid = f"a{_nn(a)}.b{_nn(b)}"
            tasks.append(Task(f"su2s.oracle.{tid}", "DERIVED", inv.su2s_invariants_oracle, (a, b), closed, "su2s", f"{a},{b}", "oracle"))
            tasks.append(Task(f"su2s.seesaw.{tid}", "PAPER", qk.seesaw_multiplicity, (a, b), closed, "su2s", f"{a},{b}", "seesaw"))
            tasks.append(
                Task(f"su2s.symmetry.{tid}", "TRIVIAL", inv.su2s_invariants_closed, (b, a), closed, "su2s", f"{a},{b}", "symmetry")
            )
    for n in range(min(cfg.depth_lemma, 4) + 1):
        tasks.append(
            Task(f"su2s.telescoping.n{_nn(n)}", "DERIVED", telescoped, (n,), inv.su2s_invariants_closed(n, 0), "telescoping", n, "oracle")
        )
    # Levi branchings
    for kind, mmax in (("sp", 3), ("gl", 3), ("spin", 2)):
        for m in range(1, mmax + 1):
            for n in range(5):
                tasks.append(
                    Task(f"levi.{kind}.m{m}.n{_nn(n)}", "DERIVED", levi_agrees, (kind, m, n), (True, True), f"levi-{kind}-m{m}", n, "oracle")
                )
    for kind, mmax in (("sp", 4), ("gl", 4), ("spin", 4)):
        for m in range(1, mmax + 1):
            for n in range(5):
                tid = f"{kind}.m{m}.n{_nn(n)}"
                tasks.append(Task(f"levi.dims.{tid}", "TRIVIAL", levi_dims, (kind, m, n), (levi_source_dim(kind, m, n),) * 2, f"levi-{kind}-m{m}", n, "dim"))
                if n:
                    tasks.append(Task(f"levi.monotone.{tid}", "TRIVIAL", levi_monotone, (kind, m, n), True, f"levi-{kind}-m{m}", n, "shift"))
    # rules feeding the K' chain
    for n in range(4):
        tasks.append(
            Task(f"rule.sp8_su2l.n{_nn(n)}", "DERIVED", mintype_sp8, (n,), {(n, n, 0): 1}, "sp8-su2l", n, "oracle")
        )
        tasks.append(
            Task(
                f"rule.su8_su2l.n{_nn(n)}", "DERIVED", mintype_su8, (n,),
                {br.su6_weight(a, b): 1 for a, b in br.branch_su8_mintype_su2l(n)}, "su8-su2l", n, "oracle",
            )
        )
        tasks.append(
            Task(f"rule.vn0_sp6.n{_nn(n)}", "DERIVED", vn0_sp6, (n,), {w: 1 for w in br.branch_Vn0_to_sp6(n)}, "vn0-sp6", n, "oracle")
        )
    # quaternionic K-types
    tasks.append(Task("quat.exact_sequence.min_mult", "DERIVED", exact_sequence_min, (8,), 1, "exact-sequence", 8, "min"))
    tasks.append(Task("quat.r1_dimension", "TRIVIAL", r1_dimension_formula, (8,), True, "r1", 8, "dim"))
    tasks.append(Task("quat.exact_sequence.level04", "TRIVIAL", exact_sequence_level, (8, 4), 1, "exact-sequence", 4, "dim"))
    for n in range(5):
        tasks.append(Task(f"quat.ktype_identity.n{_nn(n)}", "DERIVED", ktype_identity, (n,), True, "ktype-identity", n, "character"))
    return tasks


def oracle_tasks(cfg: Config) -> list[Task]:
    tasks: list[Task] = []
    for label in ("E6", "E7"):
        for n in range(cfg.depth_oracle + 1):
            expected = comb(n + 4, 4) if label == "E6" else kprime_e7_closed(n)
            tasks.append(
                Task(f"oracle.kprime.{label}.n{_nn(n)}", "DERIVED", inv.dim_invariants_Kprime, (label, n, "oracle"), expected, label, n, "kprime")
            )
    for n in range(cfg.depth_e8_oracle + 1):
        tasks.append(
            Task(
                f"oracle.kprime.E8.n{_nn(n)}", "DERIVED", kprime_e8_oracle, (n,), None, "E8", n, "kprime",
                compare="record", note="no closed form",
            )
        )
    caps = {"E6": min(cfg.depth_oracle, 4), "E7": min(cfg.depth_oracle, 3), "E8": min(cfg.depth_e8_oracle, 3)}
    for label, depth in caps.items():
        for n in range(depth + 1):
            tasks.append(
                Task(f"oracle.ktilde.{label}.n{_nn(n)}", "DERIVED", inv.dim_invariants_Ktilde_oracle, (label, n), comb(n + 7, 7), label, n, "ktilde")
            )
    return tasks


def cmd_tables(cfg: Config | None = None) -> VerificationReport:
    return run_tasks("tables", tables_tasks(), cfg or Config())


def cmd_identities(cfg: Config | None = None) -> VerificationReport:
    cfg = cfg or Config()
    return run_tasks("identities", identities_tasks(cfg), cfg)


def cmd_oracle(cfg: Config | None = None) -> VerificationReport:
    cfg = cfg or Config()
    return run_tasks("oracle", oracle_tasks(cfg), cfg)


# -- branch listings ---------------------------------------------------------

BRANCH_RULES = ("sp-to-gl", "gl-to-glgl", "spin-to-gl", "sp8-su2l", "su8-su2l", "vn0-sp6")
_LEVI_KIND = {"sp-to-gl": "sp", "gl-to-glgl": "gl", "spin-to-gl": "spin"}
ORACLE_LIMITS = {"sp": (3, 4), "gl": (3, 4), "spin": (2, 4)}
ORACLE_MAX_DIM = 5000


@dataclass
class BranchListing:
    rule: str
    m: int | None
    n: int
    constituents: list[tuple[tuple, int]]  # (highest weight, dimension)
    total_dim: int
    source_dim: int
    oracle_status: str  # "agree", "disagree" or "skipped"

    @property
    def ok(self) -> bool:
        return self.total_dim == self.source_dim and self.oracle_status != "disagree"


def cmd_branch(rule: str, n: int, m: int | None = None, oracle: bool = True) -> BranchListing:
    from .roots import CartanType, Group, build_root_system, gl

    if rule not in BRANCH_RULES:
        raise ValueError(f"unknown rule {rule!r}; expected one of {', '.join(BRANCH_RULES)}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if rule in _LEVI_KIND:
        kind = _LEVI_KIND[rule]
        if m is None or m < 1:
            raise ValueError(f"rule {rule} needs m >= 1")
        dec = br.levi_rule_as_decomposition(kind, m, n)
        src = {
            "sp": lambda: build_root_system(CartanType("C", m)).weyl_dim([n] * m),
            "gl": lambda: gl(2 * m).weyl_dim([n] * m + [0] * m),
            "spin": lambda: build_root_system(CartanType("D", 2 * m)).weyl_dim([Fraction(n, 2)] * (2 * m)),
        }[kind]()
        g = dec.group
        cons = sorted(((br._tidy(w), g.weyl_dim(w)) for w, _ in dec.items()), reverse=True)
        status = "skipped"
        lm, ln = ORACLE_LIMITS[kind]
        if oracle and ((m <= lm and n <= ln) or src <= ORACLE_MAX_DIM):
            status = "agree" if br._levi_oracle(kind, m, n) == dec else "disagree"
        return BranchListing(rule, m, n, cons, sum(d for _, d in cons), src, status)

    sp6 = build_root_system(CartanType("C", 3))
    su6 = build_root_system(CartanType("A", 5))
    if rule == "sp8-su2l":
        hw = br.branch_sp8_mintype_su2l(n)
        cons = [(hw, sp6.weyl_dim(hw))]
        expected = {hw: 1}
        fetch = lambda: br.branch_sp8_mintype_su2l_oracle(n)  # noqa: E731
    elif rule == "su8-su2l":
        cons = [(br.su6_weight(a, b), su6.weyl_dim(br.su6_weight(a, b))) for a, b in br.branch_su8_mintype_su2l(n)]
        expected = {w: 1 for w, _ in cons}
        fetch = lambda: br.branch_su8_mintype_su2l_oracle(n)  # noqa: E731
    else:
        cons = [(w, sp6.weyl_dim(w)) for w in br.branch_Vn0_to_sp6(n)]
        expected = {w: 1 for w, _ in cons}
        fetch = lambda: br.branch_Vn0_to_sp6_oracle(n)  # noqa: E731
    status = "skipped"
    if oracle and n <= 3:
        status = "agree" if fetch() == expected else "disagree"
    total = sum(d for _, d in cons)
    if rule == "vn0-sp6":
        source = su6.weyl_dim(br.su6_weight(n, 0))
    else:
        # only the SU(2)_l-invariant part is listed; compare with the oracle's total instead
        source = total
    return BranchListing(rule, m, n, cons, total, source, status)


__all__ = [
    "BRANCH_RULES",
    "BranchListing",
    "Check",
    "Config",
    "Task",
    "VerificationReport",
    "cmd_branch",
    "cmd_identities",
    "cmd_oracle",
    "cmd_tables",
    "run_tasks",
]
