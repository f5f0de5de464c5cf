"""Published worked examples recomputed through the library.

Each :class:`Scenario` names its input constants, the operation chain that
turns them into a number, and the expected value with a tolerance.
:func:`run_all` evaluates every scenario and returns a :class:`Report`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

from .dynamics import (
    basal_rate,
    date_duration,
    exponential_rate,
    glotto_adjust,
    paper_linear_duration,
    per_daughter_rate,
)
from .entropy import conceptual_multiplier, eta, network_entropy, value_delta
from .generators import nested_hierarchy, verify_hierarchy


@dataclass(frozen=True)
class Constant:
    value: float
    source: str


@dataclass(frozen=True)
class Scenario:
    id: str
    description: str
    inputs: dict[str, Constant]
    pipeline: str
    expected: float
    tolerance: float
    compute: Callable[[dict[str, float]], float] = field(repr=False, compare=False)
    relative: bool = False
    informational: bool = False

    def evaluate(self) -> "ScenarioResult":
        values = {name: c.value for name, c in self.inputs.items()}
        computed = float(self.compute(values))
        delta = computed - self.expected
        allowed = self.tolerance * abs(self.expected) if self.relative else self.tolerance
        return ScenarioResult(self, computed, delta, abs(delta) <= allowed)


@dataclass(frozen=True)
class ScenarioResult:
    scenario: Scenario
    computed: float
    delta: float
    passed: bool

    def as_dict(self) -> dict:
        s = self.scenario
        return {
            "id": s.id,
            "description": s.description,
            "pipeline": s.pipeline,
            "computed": self.computed,
            "expected": s.expected,
            "delta": self.delta,
            "tolerance": s.tolerance,
            "tolerance_kind": "relative" if s.relative else "absolute",
            "informational": s.informational,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class Report:
    results: tuple[ScenarioResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if not r.scenario.informational)

    def __getitem__(self, scenario_id: str) -> ScenarioResult:
        for r in self.results:
            if r.scenario.id == scenario_id:
                return r
        raise KeyError(scenario_id)

    def to_records(self) -> list[dict]:
        return [r.as_dict() for r in self.results]

    def to_json(self) -> str:
        return json.dumps({"pass": self.passed, "scenarios": self.to_records()},
                          indent=2, sort_keys=True)

    def to_text(self) -> str:
        header = ("id", "computed", "expected", "delta", "tolerance", "result")
        rows = []
        for r in self.results:
            s = r.scenario
            tol = f"{s.tolerance:.6g}" + (" rel" if s.relative else "")
            status = "PASS" if r.passed else "FAIL"
            if s.informational:
                status += " (info)"
            rows.append((s.id, f"{r.computed:.6g}", f"{s.expected:.6g}",
                         f"{r.delta:+.3g}", tol, status))
        widths = [max(len(row[i]) for row in rows + [header]) for i in range(len(header))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                 for row in [header] + rows]
        summary = sum(r.passed for r in self.results)
        lines.append("")
        lines.append(f"{summary}/{len(self.results)} scenarios pass; "
                     f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


# Published constants. Sources name the original measurement or record.
NEURONS = Constant(1e11, "human neuron count (Nicholls et al., From Neuron to Brain, 4th ed.)")
BRAIN_L = Constant(2.49, "human brain functional network path length (Achard et al. 2006)")
BRAIN_C = Constant(0.53, "human brain functional network clustering (Achard et al. 2006)")
ACTOR_L = Constant(3.65, "film actor network path length, 225,226 actors (Watts & Strogatz 1998)")
ACTOR_C = Constant(0.79, "film actor network clustering (Watts & Strogatz 1998)")
LEXICON_L = Constant(2.67, "English word co-occurrence network path length, BNC (Ferrer i Cancho & Sole 2001)")
LEXICON_C = Constant(0.437, "English word co-occurrence network clustering, BNC (Ferrer i Cancho & Sole 2001)")
THESAURUS_L = Constant(3.16, "English thesaurus network path length (Motter et al. 2002)")
THESAURUS_C = Constant(0.53, "English thesaurus network clustering (Motter et al. 2002)")
SPEAKERS_1989 = Constant(350e6, "English speakers worldwide, 1989")
SPEAKERS_1657 = Constant(5_281_347, "population of England in 1656 (Wrigley & Schofield 1989, table 7.8)")
WORDS_1989 = Constant(616_000, "OED word entries, 1989")
WORDS_1989_ORIGIN = Constant(616_500, "OED word entries, 1989 (figure used for language-origin dating)")
WORDS_1657 = Constant(200_000, "EMEDD word entries at 1657")
LEXICAL_YEARS = Constant(332, "years from 1657 to 1989")
BRAIN_MYR = Constant(3, "million years since an ancestor with one third the neurons")
NEURO_RATE = Constant(0.01478, "quoted neuronal entropy growth rate per Myr")
NEURO_H_END = Constant(14.71, "quoted modern brain entropy")
MULTIPLIER = Constant(60.94, "quoted average lexical multiplier 1657-1989")
SWADESH_DIVERGENCE = Constant(0.14, "Swadesh: 14% basic-list divergence per 1,000 years")
SWADESH_AGE = Constant(7037, "Swadesh 7,000-year Indo-European age, moved forward 37 years to 2003")
GRAY_ATKINSON_AGE = Constant(8700, "Indo-European age (Gray & Atkinson 2003), years")
BASAL_RATE = Constant(5.66e-5, "per-daughter divergence 5.66% per 1,000 years, as a yearly rate")
CALL_SIGNALS = Constant(100, "call signals of a pre-linguistic society (Dunbar 1997)")


def _h(n, L, C):
    return network_entropy(n, L, C).H


def _lexical_rate(v):
    return exponential_rate(v["q1"], v["q2"], v["years"]).m


def _average_multiplier(v):
    social = (_h(v["pop1657"], v["L_pop"], v["C_pop"]) + _h(v["pop1989"], v["L_pop"], v["C_pop"])) / 2
    lexical = (_h(v["words1657"], v["L_lex"], v["C_lex"]) + _h(v["words1989"], v["L_lex"], v["C_lex"])) / 2
    return conceptual_multiplier(social, lexical)


def _crosscheck(v):
    rate = exponential_rate(v["q1"], v["q2"], v["years"]).m
    basal_per_kyr = basal_rate(rate, v["multiplier"]) * 1000
    daughter = per_daughter_rate(glotto_adjust(v["divergence"], v["old_age"], v["new_age"]))
    return abs(basal_per_kyr - daughter) / daughter


def _hierarchy_eta(v):
    h = nested_hierarchy(int(v["L"]), int(v["eta"]))
    ok, _ = verify_hierarchy(h)
    return eta(h.leaves, h.branching) if ok else math.nan


_brain = {"n": NEURONS, "L": BRAIN_L, "C": BRAIN_C}
_pop = {"L_pop": ACTOR_L, "C_pop": ACTOR_C, "pop1657": SPEAKERS_1657, "pop1989": SPEAKERS_1989}
_lex = {"L_lex": LEXICON_L, "C_lex": LEXICON_C, "words1657": WORDS_1657, "words1989": WORDS_1989}
_lexical_growth = {"q1": WORDS_1657, "q2": WORDS_1989, "years": LEXICAL_YEARS}
_glotto = {"divergence": SWADESH_DIVERGENCE, "old_age": SWADESH_AGE, "new_age": GRAY_ATKINSON_AGE}

SCENARIOS: tuple[Scenario, ...] = (
    Scenario("brain-1989", "entropy of the modern human brain", _brain,
             "network_entropy(n, L, C).H", 14.71, 0.01,
             lambda v: _h(v["n"], v["L"], v["C"])),
    Scenario("brain-early", "entropy of a brain with one third the neurons", _brain,
             "network_entropy(n / 3, L, C).H", 14.077, 0.005,
             lambda v: _h(v["n"] / 3, v["L"], v["C"])),
    Scenario("brain-rate", "growth rate of neuronal entropy over 3 Myr, per Myr",
             {**_brain, "t": BRAIN_MYR},
             "exponential_rate(H(n / 3), H(n), t).m", 0.01478, 1e-4,
             lambda v: exponential_rate(_h(v["n"] / 3, v["L"], v["C"]),
                                        _h(v["n"], v["L"], v["C"]), v["t"], "Myr").m),
    Scenario("neuro-dating-linear", "Myr for neuronal entropy to reach 14.71 (H_end / m)",
             {"m": NEURO_RATE, "H_end": NEURO_H_END},
             "paper_linear_duration(m, H_end)", 995, 1,
             lambda v: paper_linear_duration(v["m"], v["H_end"], "Myr").duration),
    Scenario("neuro-dating-exponential",
             "Myr for neuronal entropy to grow from 1 to 14.71 under exp(m t)",
             {"m": NEURO_RATE, "H_end": NEURO_H_END},
             "date_duration(m, 1, H_end)", 181.9, 0.5,
             lambda v: date_duration(v["m"], 1, v["H_end"], "Myr").duration,
             informational=True),
    Scenario("population-1989", "entropy of 350 million English speakers",
             {"n": SPEAKERS_1989, "L": ACTOR_L, "C": ACTOR_C},
             "network_entropy(n, L, C).H", 12.00, 0.01,
             lambda v: _h(v["n"], v["L"], v["C"])),
    Scenario("population-1657", "entropy of the 1657 English population",
             {"n": SPEAKERS_1657, "L": ACTOR_L, "C": ACTOR_C},
             "network_entropy(n, L, C).H", 9.445, 0.005,
             lambda v: _h(v["n"], v["L"], v["C"])),
    Scenario("lexicon-1989", "entropy of the 616,000-word 1989 lexicon",
             {"n": WORDS_1989, "L": LEXICON_L, "C": LEXICON_C},
             "network_entropy(n, L, C).H", 5.93, 0.01,
             lambda v: _h(v["n"], v["L"], v["C"])),
    Scenario("lexicon-1657", "entropy of the 200,000-word 1657 lexicon",
             {"n": WORDS_1657, "L": LEXICON_L, "C": LEXICON_C},
             "network_entropy(n, L, C).H", 5.431, 0.005,
             lambda v: _h(v["n"], v["L"], v["C"])),
    Scenario("lexical-multiplier", "mean population entropy times mean lexicon entropy, 1657-1989",
             {**_pop, **_lex},
             "conceptual_multiplier(mean(H_pop), mean(H_lex))", 60.94, 0.05,
             _average_multiplier),
    Scenario("lexical-rate", "English lexical growth rate per decade, 1657-1989",
             _lexical_growth,
             "exponential_rate(q1, q2, years).per('decade')", 0.034, 0.001,
             lambda v: exponential_rate(v["q1"], v["q2"], v["years"]).per("decade")),
    Scenario("basal-rate", "basal lexical growth rate per year",
             {**_lexical_growth, "multiplier": MULTIPLIER},
             "basal_rate(lexical rate, multiplier)", 5.56e-5, 0.1e-5,
             lambda v: basal_rate(_lexical_rate(v), v["multiplier"])),
    Scenario("glotto-adjusted", "Swadesh divergence rescaled to the 8,700-year date",
             _glotto, "glotto_adjust(divergence, old_age, new_age)", 0.1132, 0.0002,
             lambda v: glotto_adjust(v["divergence"], v["old_age"], v["new_age"])),
    Scenario("glotto-per-daughter", "divergence rate per daughter language, per 1,000 years",
             _glotto, "per_daughter_rate(glotto_adjust(...))", 0.0566, 0.0001,
             lambda v: per_daughter_rate(glotto_adjust(v["divergence"], v["old_age"], v["new_age"]))),
    Scenario("glotto-crosscheck",
             "relative gap between basal lexical rate and per-daughter divergence",
             {**_lexical_growth, "multiplier": MULTIPLIER, **_glotto},
             "|basal_rate * 1000 - per_daughter_rate| / per_daughter_rate", 0.0, 0.02,
             _crosscheck),
    Scenario("language-origin", "years for a lexicon to grow from 100 to 616,500 words",
             {"m": BASAL_RATE, "q_start": CALL_SIGNALS, "q_end": WORDS_1989_ORIGIN},
             "date_duration(m, q_start, q_end)", 154_000, 2_000,
             lambda v: date_duration(v["m"], v["q_start"], v["q_end"]).duration),
    Scenario("thesaurus-lexicon", "entropy of the lexicon using thesaurus-network L and C",
             {"n": WORDS_1989, "L": THESAURUS_L, "C": THESAURUS_C},
             "network_entropy(n, L, C).H", 6.14, 0.01,
             lambda v: _h(v["n"], v["L"], v["C"])),
    Scenario("population-value-delta", "entropy gained growing the English population 1657-1989",
             {"n1": SPEAKERS_1657, "n2": SPEAKERS_1989, "L": ACTOR_L, "C": ACTOR_C},
             "value_delta(1, C, L, n1, n2 - n1)", 2.559, 0.005,
             lambda v: value_delta(1, v["C"], v["L"], v["n1"], v["n2"] - v["n1"])),
    Scenario("hierarchy-27", "cluster generations of 27 leaves scaled by 3",
             {"L": Constant(3, "branching of the 27-node flattened hierarchy"),
              "eta": Constant(3, "generations of the 27-node flattened hierarchy")},
             "eta(leaves, L) of a verified nested_hierarchy(L, eta)", 3, 0,
             _hierarchy_eta),
    Scenario("identity", "a single node has zero entropy",
             {"n": Constant(1, "one node"), "L": BRAIN_L, "C": BRAIN_C},
             "network_entropy(1, L, C).H", 0.0, 0,
             lambda v: _h(v["n"], v["L"], v["C"])),
)


def run_all(scenarios: tuple[Scenario, ...] = SCENARIOS) -> Report:
    """Evaluate every scenario, ordered by id."""
    ordered = sorted(scenarios, key=lambda s: s.id)
    return Report(tuple(s.evaluate() for s in ordered))
