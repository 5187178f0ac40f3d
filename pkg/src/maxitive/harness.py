"""Seeded random measures and executable checks of the representation results.

Every trial draws its randomness from ``random.Random`` seeded with the
string ``"{seed}:{trial_index}:{stream}"``, so a trial can be replayed in
isolation and reports are a pure function of the configuration.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .core import (
    AdditiveMeasure,
    MaxitiveMeasure,
    MeasureError,
    SetFunction,
    Space,
    Verdict,
    induced_delta,
    is_maxitive,
    is_two_valued,
    make_space,
)
from .extrat import INF, ONE, ZERO, ExtRat, ext
from .integral import Density, ess_sup, shilkret_integral, shilkret_oracle, shilkret_table
from .radon_nikodym import (
    NotAbsolutelyContinuous,
    NotSigmaFinite,
    absolutely_continuous,
    densities_agree_ae,
    density,
    density_by_ideals,
    verify_density,
)
from .variation import disjoint_variation, variation_oracle

__all__ = [
    "DEFAULT_GRID",
    "PreconditionNotTwoValued",
    "TrialConfig",
    "FailureRecord",
    "TrialReport",
    "random_maxitive",
    "random_additive",
    "verify_representation",
    "verify_corollary",
    "verify_sugeno_murofushi",
    "check_leastness",
    "shrink",
    "run_trials",
]

DEFAULT_GRID = tuple(ExtRat(v) for v in ("0", "1/3", "1/2", "1", "2", "7", "inf"))


class PreconditionNotTwoValued(MeasureError):
    pass


@dataclass(frozen=True)
class TrialConfig:
    seed: int
    trials: int
    max_atoms: int = 6
    value_grid: tuple[ExtRat, ...] = DEFAULT_GRID
    infinity_weight: Fraction = Fraction(1, 16)
    # draw arbitrary rationals p/q (p <= 24, q <= 12) instead of grid values
    rational_mode: bool = False

    def __post_init__(self):
        object.__setattr__(self, "value_grid", tuple(ext(v) for v in self.value_grid))
        object.__setattr__(self, "infinity_weight", Fraction(self.infinity_weight))
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 1 <= self.max_atoms <= 6:
            raise ValueError("max_atoms must lie in [1, 6]")
        if not self.value_grid:
            raise ValueError("value_grid must be nonempty")
        if not 0 <= self.infinity_weight <= 1:
            raise ValueError("infinity_weight must lie in [0, 1]")

    def rng(self, trial_index: int, stream: str) -> random.Random:
        return random.Random(f"{self.seed}:{trial_index}:{stream}")

    def draw(self, rng: random.Random, *, finite: bool = False) -> ExtRat:
        finite_grid = [v for v in self.value_grid if v.is_finite]
        if self.rational_mode:
            if not finite and rng.random() < self.infinity_weight:
                return INF
            return ExtRat(rng.randint(0, 24), rng.randint(1, 12))
        has_inf = len(finite_grid) < len(self.value_grid)
        if has_inf and not finite:
            if not finite_grid or rng.random() < self.infinity_weight:
                return INF
        if not finite_grid:
            return ONE
        return rng.choice(finite_grid)


def _space(n: int) -> Space:
    return make_space([chr(ord("a") + i) for i in range(n)])


def random_maxitive(config: TrialConfig, trial_index: int) -> MaxitiveMeasure:
    """Measure for one trial; depends only on ``(config, trial_index)``."""
    rng = config.rng(trial_index, "tau")
    n = rng.randint(1, config.max_atoms)
    return MaxitiveMeasure(_space(n), [config.draw(rng) for _ in range(n)])


def random_additive(config: TrialConfig, trial_index: int, space: Space | None = None) -> AdditiveMeasure:
    rng = config.rng(trial_index, "m")
    if space is None:
        space = _space(rng.randint(1, config.max_atoms))
    return AdditiveMeasure(space, [config.draw(rng) for _ in range(space.n)])


def verify_representation(tau: MaxitiveMeasure) -> Verdict:
    """Run the essential-supremum representation pipeline on ``tau``.

    ``m`` is the disjoint variation, ``delta_m`` its induced two-valued
    measure and ``c`` the density of ``tau`` against ``delta_m``; ``tau``
    must equal the ``m``-essential supremum of ``c`` on every set.
    """
    space = tau.space
    m = disjoint_variation(tau)
    details: dict = {"m": m}
    for b in space.subsets():
        if bool(tau(b).num) != bool(m(b).num):
            return Verdict(False, b, "positivity", details)
    delta = induced_delta(m)
    details["delta_m"] = delta
    ac = absolutely_continuous(tau, delta)
    if not ac:
        return Verdict(False, ac.witness.set, "absolute_continuity", details)
    try:
        c = density(tau, delta)
    except MeasureError as exc:
        return Verdict(False, str(exc), "density", details)
    details["c"] = c
    for b in space.subsets():
        if tau(b) != ess_sup(c, m, b):
            return Verdict(False, b, "ess_sup", details)
    return Verdict(True, details=details)


def verify_corollary(tau: MaxitiveMeasure) -> Verdict:
    """A two-valued ``tau`` coincides with ``delta_m`` for its disjoint variation ``m``."""
    if not is_two_valued(tau):
        raise PreconditionNotTwoValued(f"range of tau is {sorted(set(tau.table))}, not {{0, 1}}")
    m = disjoint_variation(tau)
    delta = induced_delta(m)
    details = {"m": m, "delta_m": delta}
    for b in tau.space.subsets():
        if tau(b) != delta(b):
            return Verdict(False, b, "induced", details)
    return Verdict(True, details=details)


_NULL_FILLERS = (ExtRat(99), INF, ExtRat(1, 7), ONE)


def verify_sugeno_murofushi(tau: MaxitiveMeasure, nu: MaxitiveMeasure) -> Verdict:
    """Both directions of the density theorem plus almost-everywhere uniqueness.

    ``nu`` must be finite on atoms; :class:`NotSigmaFinite` propagates.
    """
    for label, v in zip(nu.space.atoms, nu.atom_values):
        if v.is_inf:
            raise NotSigmaFinite(label)
    ac = absolutely_continuous(tau, nu)
    if not ac:
        try:
            density(tau, nu)
        except NotAbsolutelyContinuous as exc:
            if exc.witness.set != ac.witness.set:
                return Verdict(False, exc.witness.set, "refusal_witness")
            return Verdict(True, details={"absolutely_continuous": False})
        return Verdict(False, ac.witness.set, "refusal")
    c = density(tau, nu)
    verdict = verify_density(tau, nu, c)
    if not verdict:
        return Verdict(False, verdict.witness, "density", {"c": c})
    # perturb on nu-null atoms only
    null = [i for i, v in enumerate(nu.atom_values) if not v.num]
    perturbed = c.replace({i: _NULL_FILLERS[k % len(_NULL_FILLERS)] for k, i in enumerate(null)})
    verdict = verify_density(tau, nu, perturbed)
    if not verdict:
        return Verdict(False, verdict.witness, "null_atom_freedom", {"c": c, "perturbed": perturbed})
    if not densities_agree_ae(c, perturbed, nu):
        return Verdict(False, None, "uniqueness", {"c": c, "perturbed": perturbed})
    other = density_by_ideals(tau, nu)
    if not densities_agree_ae(c, other, nu):
        return Verdict(False, None, "uniqueness_ideals", {"c": c, "ideals": other})
    # converse direction: any density defines a maxitive measure with tau << nu
    induced = MaxitiveMeasure(tau.space, [shilkret_integral(perturbed, nu, 1 << i) for i in range(tau.space.n)])
    table = SetFunction(tau.space, shilkret_table(perturbed, nu))
    mv = is_maxitive(table)
    if not mv:
        return Verdict(False, mv.witness, "converse_maxitive")
    if not absolutely_continuous(induced, nu):
        return Verdict(False, None, "converse_absolute_continuity")
    return Verdict(True, details={"absolutely_continuous": True, "c": c})


def check_leastness(tau: MaxitiveMeasure, m_prime: AdditiveMeasure) -> Verdict | None:
    """If ``m_prime`` dominates ``tau`` on every set, it must dominate the disjoint variation.

    Returns ``None`` when ``m_prime`` does not dominate ``tau``.
    """
    space = tau.space
    if any(m_prime(b) < tau(b) for b in space.subsets()):
        return None
    m = disjoint_variation(tau)
    for b in space.subsets():
        if m_prime(b) < m(b):
            return Verdict(False, b, "leastness")
    return Verdict(True)


# trial inputs are per-atom vectors keyed by role, so shrinking can delete
# atoms uniformly across every input of a failing check
Inputs = Mapping[str, Sequence[ExtRat]]
Check = Callable[[Space, Inputs], Verdict]


def _check_representation(space: Space, inputs: Inputs) -> Verdict:
    return verify_representation(MaxitiveMeasure(space, inputs["tau"]))


def _check_corollary(space: Space, inputs: Inputs) -> Verdict:
    tau = MaxitiveMeasure(space, inputs["tau"])
    if not is_two_valued(tau):
        return Verdict(True)
    return verify_corollary(tau)


def _check_sugeno_murofushi(space: Space, inputs: Inputs) -> Verdict:
    return verify_sugeno_murofushi(MaxitiveMeasure(space, inputs["tau"]), MaxitiveMeasure(space, inputs["nu"]))


def _membership(space: Space, flags: Sequence[ExtRat]) -> int:
    return sum(1 << i for i, f in enumerate(flags) if f.num)


def _check_shilkret_oracle(space: Space, inputs: Inputs) -> Verdict:
    c = Density(space, inputs["c"])
    nu = MaxitiveMeasure(space, inputs["nu"])
    for b in (_membership(space, inputs["set"]), space.full):
        if shilkret_integral(c, nu, b) != shilkret_oracle(c, nu, b):
            return Verdict(False, b, "shilkret_oracle")
    return Verdict(True)


def _check_variation_oracle(space: Space, inputs: Inputs) -> Verdict:
    tau = MaxitiveMeasure(space, inputs["tau"])
    m = disjoint_variation(tau)
    for b in (_membership(space, inputs["set"]), space.full):
        if m(b) != variation_oracle(tau, b):
            return Verdict(False, b, "variation_oracle")
    return Verdict(True)


CHECKS: dict[str, Check] = {
    "representation": _check_representation,
    "corollary": _check_corollary,
    "corollary_induced": _check_corollary,
    "sugeno_murofushi": _check_sugeno_murofushi,
    "shilkret_oracle": _check_shilkret_oracle,
    "variation_oracle": _check_variation_oracle,
}


def _fails(check: Check, space: Space, inputs: Inputs) -> Verdict | None:
    try:
        verdict = check(space, inputs)
    except Exception as exc:  # noqa: BLE001 - an exception is a failing trial
        return Verdict(False, f"{type(exc).__name__}: {exc}", "exception")
    return None if verdict else verdict


def shrink(check: Check, space: Space, inputs: Inputs) -> tuple[Space, dict, Verdict]:
    """Deterministically reduce a failing input: delete atoms, then zero values.

    Each candidate is kept only if the check still fails on it.
    """
    inputs = {k: list(v) for k, v in inputs.items()}
    verdict = _fails(check, space, inputs)
    if verdict is None:
        raise ValueError("shrink needs a failing input")
    i = 0
    while space.n > 1 and i < space.n:
        labels = [a for j, a in enumerate(space.atoms) if j != i]
        candidate_space = make_space(labels)
        candidate = {k: v[:i] + v[i + 1 :] for k, v in inputs.items()}
        failed = _fails(check, candidate_space, candidate)
        if failed is not None:
            space, inputs, verdict = candidate_space, candidate, failed
        else:
            i += 1
    for key in sorted(inputs):
        for i in range(space.n):
            if inputs[key][i].is_zero:
                continue
            candidate = {k: list(v) for k, v in inputs.items()}
            candidate[key][i] = ZERO
            failed = _fails(check, space, candidate)
            if failed is not None:
                inputs, verdict = candidate, failed
    return space, inputs, verdict


@dataclass(frozen=True)
class FailureRecord:
    trial_index: int
    property: str
    inputs: dict
    witness: str
    stage: str | None

    def to_dict(self) -> dict:
        return {
            "trial_index": self.trial_index,
            "property": self.property,
            "stage": self.stage,
            "witness": self.witness,
            "inputs": self.inputs,
        }


@dataclass(frozen=True)
class TrialReport:
    config: TrialConfig
    trials_run: int = 0
    failures: int = 0
    first_failure: FailureRecord | None = None
    checks: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.failures == 0) != (self.first_failure is None):
            raise ValueError("first_failure must be present exactly when failures > 0")

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "seed": cfg.seed,
                "trials": cfg.trials,
                "max_atoms": cfg.max_atoms,
                "value_grid": [str(v) for v in cfg.value_grid],
                "infinity_weight": str(cfg.infinity_weight),
                "rational_mode": cfg.rational_mode,
            },
            "trials_run": self.trials_run,
            "failures": self.failures,
            "checks": dict(sorted(self.checks.items())),
            "first_failure": None if self.first_failure is None else self.first_failure.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        cfg = self.config
        lines = [
            f"seed: {cfg.seed}",
            f"trials: {self.trials_run}",
            f"max_atoms: {cfg.max_atoms}",
            f"value_grid: {', '.join(str(v) for v in cfg.value_grid)}",
            f"failures: {self.failures}",
        ]
        for name, count in sorted(self.checks.items()):
            lines.append(f"checked {name}: {count}")
        if self.first_failure is not None:
            f = self.first_failure
            lines.append(f"first failure: trial {f.trial_index}, property {f.property}, stage {f.stage}")
            lines.append(f"  witness: {f.witness}")
            for key, values in sorted(f.inputs.items()):
                if key == "atoms":
                    lines.append(f"  atoms: {', '.join(values)}")
                else:
                    lines.append(f"  {key}: {', '.join(values)}")
        lines.append("verdict: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def _trial_inputs(config: TrialConfig, index: int) -> tuple[Space, dict[str, list[ExtRat]]]:
    tau = random_maxitive(config, index)
    space = tau.space
    rng = config.rng(index, "aux")
    nu = [config.draw(rng, finite=True) for _ in range(space.n)]
    c = [config.draw(rng) for _ in range(space.n)]
    member = [ONE if rng.random() < 0.5 else ZERO for _ in range(space.n)]
    return space, {"tau": list(tau.atom_values), "nu": nu, "c": c, "set": member}


def _ac_part(tau: Sequence[ExtRat], nu: Sequence[ExtRat]) -> list[ExtRat]:
    return [t if v.num else ZERO for t, v in zip(tau, nu)]


def _run_one(config: TrialConfig, index: int) -> tuple[dict[str, int], FailureRecord | None, int]:
    space, inputs = _trial_inputs(config, index)
    tau = MaxitiveMeasure(space, inputs["tau"])
    delta = induced_delta(disjoint_variation(tau))
    plan: list[tuple[str, dict]] = [
        ("representation", {"tau": inputs["tau"]}),
        ("sugeno_murofushi", {"tau": inputs["tau"], "nu": inputs["nu"]}),
        ("sugeno_murofushi", {"tau": _ac_part(inputs["tau"], inputs["nu"]), "nu": inputs["nu"]}),
        ("shilkret_oracle", {"c": inputs["c"], "nu": inputs["tau"], "set": inputs["set"]}),
        ("variation_oracle", {"tau": inputs["tau"], "set": inputs["set"]}),
    ]
    if is_two_valued(tau):
        plan.append(("corollary", {"tau": inputs["tau"]}))
    if not delta.is_zero():
        plan.append(("corollary_induced", {"tau": list(delta.atom_values)}))
    counts: dict[str, int] = {}
    first = None
    failures = 0
    for name, args in plan:
        counts[name] = counts.get(name, 0) + 1
        check = CHECKS[name]
        if _fails(check, space, args) is None:
            continue
        failures += 1
        if first is None:
            s_space, s_inputs, verdict = shrink(check, space, args)
            first = FailureRecord(
                trial_index=index,
                property=name,
                inputs={"atoms": list(s_space.atoms), **{k: [str(v) for v in vals] for k, vals in s_inputs.items()}},
                witness=_render_witness(s_space, verdict.witness),
                stage=verdict.stage,
            )
    return counts, first, failures


def _render_witness(space: Space, witness) -> str:
    if isinstance(witness, int) and not isinstance(witness, bool) and 0 <= witness <= space.full:
        return "{" + space.format_set(witness) + "}"
    if isinstance(witness, tuple):
        return "(" + ", ".join(_render_witness(space, w) for w in witness) + ")"
    return str(witness)


def run_trials(config: TrialConfig) -> TrialReport:
    """Run every check on ``config.trials`` generated inputs, in trial order."""
    counts: dict[str, int] = {}
    failures = 0
    first = None
    for index in range(config.trials):
        trial_counts, trial_first, trial_failures = _run_one(config, index)
        for name, k in trial_counts.items():
            counts[name] = counts.get(name, 0) + k
        failures += trial_failures
        if first is None:
            first = trial_first
    return TrialReport(config, config.trials, failures, first, counts)
