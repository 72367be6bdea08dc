"""Self-verification: derivative axioms, rank identities, monotonicity.

Runs sampled exact checks against a loaded complex and reports
counterexamples.  All sampling is seeded, so repeated runs are
byte-identical.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .calculus import (
    ChangeAction,
    LawReport,
    check_cad1,
    check_cad2,
    degree_shift_action,
    derivative_mor,
    derivative_obj,
    integer_subtraction_action,
    pair_group_rank,
    square_subtraction_action,
    union_rank_functor,
)
from .complexes import FilteredComplex
from .linalg import contains
from .memory import blanket_union, boundaries_on_open, cycles_on_open, lifespan_rank
from .oracle import NotAChain, oracle_barcode
from .posets import (
    BlanketMode,
    GradedPair,
    describe_open,
    enumerate_diagram_pairs,
    pair_blankets,
)


@dataclass
class VerifyReport:
    results: list[LawReport] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def as_text(self) -> str:
        lines = [r.message() for r in self.results]
        lines += [f"note: {n}" for n in self.notes]
        lines.append("verification " + ("PASSED" if self.ok else "FAILED"))
        return "\n".join(lines) + "\n"

    def as_json(self) -> dict:
        return {
            "format_version": 1,
            "kind": "verification",
            "ok": self.ok,
            "checks": [
                {
                    "name": r.name,
                    "samples": r.checked,
                    "counterexamples": [repr(c) for c in r.counterexamples],
                }
                for r in self.results
            ],
            "notes": list(self.notes),
        }


def _sample_graded_pairs(rng, pairs, count, max_degree=2):
    out = []
    for _ in range(count):
        out.append(GradedPair(rng.choice(pairs), rng.choice((0, 0, 1, max_degree))))
    return out


def _blanket_walk(rng, p, pair, steps, mode):
    current = pair
    for _ in range(steps):
        options = pair_blankets(p, current, mode)
        if not options:
            break
        current = rng.choice(options)
    return current


def run_verification(
    k: FilteredComplex,
    samples: int = 50,
    seed: int = 0,
    include_oracle: bool = False,
    modes=(BlanketMode.FULL, BlanketMode.PRINCIPAL),
) -> VerifyReport:
    k.require_valid()
    rng = random.Random(seed)
    p = k.poset
    report = VerifyReport()
    pairs = enumerate_diagram_pairs(p)
    degrees = list(range(max(k.max_dim, 0) + 1))

    # Pair-group rank versus lifespan quotient rank, every pair, both modes.
    rank_identity = LawReport("pair-group-equals-lifespan-rank")
    for mode in modes:
        for n in degrees:
            for pair in pairs:
                rank_identity.checked += 1
                derivative_route = pair_group_rank(k, n, pair, mode)
                quotient_route = lifespan_rank(k, n, pair, mode)
                if derivative_route != quotient_route:
                    rank_identity.counterexamples.append(
                        (
                            mode.value,
                            n,
                            describe_open(p, pair.birth),
                            describe_open(p, pair.death),
                            derivative_route,
                            quotient_route,
                        )
                    )
    report.results.append(rank_identity)

    # Derivative axioms for the union-rank functor, objects and morphisms.
    shift = degree_shift_action()
    int_cod = integer_subtraction_action()
    sq_cod = square_subtraction_action()
    for mode in (BlanketMode.FULL,):
        for d in degrees:
            F = union_rank_functor(k, d, mode)
            objs = _sample_graded_pairs(rng, pairs, samples)
            one_two = [rng.choice((0, 1, 1, 2)) for _ in objs]
            cad1 = check_cad1(
                F.on_object,
                lambda x, m: derivative_obj(F, shift, x, m),
                shift,
                int_cod,
                [(x, m) for x, m in zip(objs, one_two)],
            )
            cad1.name = f"cad1-objects-d{d}"
            report.results.append(cad1)
            triples = [
                (x, rng.choice((0, 1, 2)), rng.choice((0, 1)))
                for x in _sample_graded_pairs(rng, pairs, samples)
            ]
            cad2 = check_cad2(
                F.on_object,
                lambda x, m: derivative_obj(F, shift, x, m),
                shift,
                int_cod,
                triples,
            )
            cad2.name = f"cad2-objects-d{d}"
            report.results.append(cad2)

            # Morphism level: comparable graded pairs via blanket walks.
            mor_dom = ChangeAction(
                act=lambda m, dm: (shift.act(m[0], dm[0]), shift.act(m[1], dm[1])),
                add=lambda a, b: (a[0] + b[0], a[1] + b[1]),
                zero=(0, 0),
            )
            morphisms = []
            for _ in range(max(samples // 4, 4)):
                base = rng.choice(pairs)
                upper = _blanket_walk(rng, p, base, rng.choice((0, 1, 2)), mode)
                extra = rng.choice((0, 1))
                m_deg = rng.choice((0, 1))
                lo = GradedPair(upper, m_deg + extra)
                hi = GradedPair(base, m_deg)
                morphisms.append((lo, hi))
            dm_samples = [(rng.choice((1, 2)), rng.choice((0, 1))) for _ in morphisms]
            dm_samples = [(a + b, b) for a, b in dm_samples]  # first shift dominates
            cad1m = check_cad1(
                lambda m: F.on_morphism(*m),
                lambda m, dm: derivative_mor(F, shift, m, dm),
                mor_dom,
                sq_cod,
                list(zip(morphisms, dm_samples)),
            )
            cad1m.name = f"cad1-morphisms-d{d}"
            report.results.append(cad1m)
            cad2m = check_cad2(
                lambda m: F.on_morphism(*m),
                lambda m, dm: derivative_mor(F, shift, m, dm),
                mor_dom,
                sq_cod,
                [
                    (m, dm, (rng.choice((0, 1)),) * 2)
                    for m, dm in zip(morphisms, dm_samples)
                ],
            )
            cad2m.name = f"cad2-morphisms-d{d}"
            report.results.append(cad2m)

    # Presheaf monotonicity of cycles/boundaries over sampled nested opens.
    presheaf = LawReport("presheaf-monotonicity")
    for _ in range(samples):
        inner = p.closure(rng.sample(range(p.n), rng.randint(0, max(p.n // 2, 1))))
        extra = rng.sample(range(p.n), rng.randint(0, min(2, p.n)))
        outer = p.closure(sorted(inner.members) + extra)
        n = rng.choice(degrees)
        presheaf.checked += 1
        if not contains(cycles_on_open(k, n, inner), cycles_on_open(k, n, outer)):
            presheaf.counterexamples.append(("cycles", n, sorted(outer.members), sorted(inner.members)))
        presheaf.checked += 1
        if not contains(boundaries_on_open(k, n, inner), boundaries_on_open(k, n, outer)):
            presheaf.counterexamples.append(("boundaries", n, sorted(outer.members), sorted(inner.members)))
    report.results.append(presheaf)

    # Extended functor monotonicity: union ranks grow along restriction.
    extended = LawReport("extended-functor-monotonicity")
    for _ in range(samples):
        base = rng.choice(pairs)
        m_deg = rng.choice((0, 1))
        steps = rng.choice((0, 1, 2))
        upper = _blanket_walk(rng, p, base, steps, BlanketMode.FULL)
        n_deg = m_deg + rng.choice((0, 1, 2))
        d = rng.choice(degrees)
        extended.checked += 1
        small = blanket_union(k, d, upper, n_deg, BlanketMode.FULL)
        big = blanket_union(k, d, base, m_deg, BlanketMode.FULL)
        if not contains(big, small):
            extended.counterexamples.append((d, describe_open(p, upper.birth), n_deg, describe_open(p, base.birth), m_deg))
    report.results.append(extended)

    # Blanket mode comparison is informational: the two cover notions may
    # disagree away from chains; report where.
    diffs = 0
    example = None
    for pair in pairs:
        full = set(pair_blankets(p, pair, BlanketMode.FULL))
        principal = set(pair_blankets(p, pair, BlanketMode.PRINCIPAL))
        if full != principal:
            diffs += 1
            if example is None:
                example = pair
    if diffs:
        msg = (
            f"blanket modes disagree on {diffs}/{len(pairs)} enumerated pairs; "
            f"first at ({describe_open(p, example.birth)}, {describe_open(p, example.death)})"
        )
        report.notes.append(msg)
    else:
        report.notes.append("blanket modes agree on all enumerated pairs")

    if include_oracle:
        oracle_check = LawReport("oracle-barcode-agreement")
        try:
            from .diagrams import chain_diagram_counter

            expected = oracle_barcode(k)
            got = chain_diagram_counter(k)
            oracle_check.checked += 1
            if expected != got:
                missing = expected - got
                extra = got - expected
                oracle_check.counterexamples.append(
                    ("missing", dict(missing), "extra", dict(extra))
                )
        except NotAChain:
            report.notes.append("oracle comparison skipped: poset is not a chain")
        else:
            report.results.append(oracle_check)
    return report
