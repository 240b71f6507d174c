"""Command-line front door: verification suites and demos.

Three subcommands, each emitting a machine-readable JSON report (and
CSV files on request):

  lattice-check      lattice laws on random subspace instances, or
                     exhaustively on a finite classical phase space
  composite-verify   composite-system axioms plus the product/tensor
                     isomorphism, classical or quantum
  truth-demo         oscillator energies, truth values, eigenfunctions

Exit codes: 0 when the expected pattern holds, 1 on verification
failure, 2 on usage errors.  Identical configuration (including the
seed) yields a byte-identical report; all randomness is derived from
the single --seed flag via subseed(seed, command_name, trial_index).
The environment variable ORTHOLOGIC_TOL overrides eps_eq globally.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import classical as cl
from . import laws
from . import subspace as sub
from .composite import canonical_h, verify_axioms, verify_tensor_isomorphism
from .core import DEFAULT_TOL, Tolerance, random_unitary, random_vector, subseed
from .errors import OrthologicError
from .oscillator import (
    OscillatorModel,
    energies,
    hermite_eigenfunction,
    ladder_operators,
    proposition_from_eigenstates,
)
from .truth import truth_value

SCHEMA = "orthologic/1"


def _tolerance() -> Tolerance:
    raw = os.environ.get("ORTHOLOGIC_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return Tolerance(eps_eq=float(raw))
    except ValueError as exc:
        print(f"error: invalid ORTHOLOGIC_TOL: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _emit(report: dict, output: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _nested_pair(d: int, seed: int, tol: Tolerance):
    rng = np.random.default_rng(seed)
    kq = int(rng.integers(1, d + 1))
    q = sub.random_subspace(d, kq, seed)
    kp = int(rng.integers(0, kq + 1))
    if kp == 0:
        return sub.zero_subspace(d), q
    inner = sub.random_subspace(kq, kp, seed + 1)
    return sub.span_of(list((q.basis @ inner.basis).T), tol), q


def _mixed_pair(d: int, mode: int, seed: int, tol: Tolerance):
    """Pair sampler mixing compatible-by-construction and generic pairs."""
    rng = np.random.default_rng(seed)
    if mode == 0:
        frame = random_unitary(d, seed)
        k1 = int(rng.integers(1, d + 1))
        k2 = int(rng.integers(1, d + 1))
        cols1 = sorted(rng.permutation(d)[:k1].tolist())
        cols2 = sorted(rng.permutation(d)[:k2].tolist())
        return sub.Subspace(d, frame[:, cols1]), sub.Subspace(d, frame[:, cols2])
    if mode == 1:
        p = sub.random_subspace(d, int(rng.integers(1, d)), seed)
        return p, sub.ortho(p, tol)
    if mode == 2:
        return _nested_pair(d, seed, tol)
    p = sub.random_subspace(d, int(rng.integers(1, d)), seed)
    q = sub.random_subspace(d, int(rng.integers(1, d)), seed + 1)
    return p, q


def _quantum_lattice_report(d: int, trials: int, seed: int, tol: Tolerance) -> dict:
    results: dict = {}

    worst = 0.0
    holds = True
    for t in range(trials):
        p, q = _nested_pair(d, subseed(seed, "lattice-om", t), tol)
        rep = laws.check_orthomodular(p, q, tol)
        holds = holds and rep.holds
        worst = max(worst, rep.worst_residual)
    results["orthomodular"] = {"holds": holds, "trials": trials, "worst_residual": worst}

    failures, first_ce = 0, None
    for t in range(trials):
        s = subseed(seed, "lattice-dist", t)
        rng = np.random.default_rng(s)
        a = sub.random_subspace(d, int(rng.integers(1, d)), s)
        b = sub.random_subspace(d, int(rng.integers(1, d)), s + 1)
        c = sub.random_subspace(d, int(rng.integers(1, d)), s + 2)
        rep = laws.check_distributive(a, b, c, tol)
        if not rep.holds:
            failures += 1
            if first_ce is None:
                first_ce = rep.counterexample
    results["distributive"] = {
        "holds": failures == 0,
        "failures": failures,
        "trials": trials,
        "counterexample": first_ce,
    }
    results["nondistributivity_witness"] = laws.nondistributivity_witness(tol=tol).to_json()

    agree = True
    for t in range(trials):
        s = subseed(seed, "lattice-compat", t)
        p, q = _mixed_pair(d, t % 4, s, tol)
        c1 = laws.compatible(p, q, tol)
        c2 = laws.compatible_second_criterion(p, q, tol)
        c3 = laws.commuting_projectors(p, q, tol)
        agree = agree and (c1 == c2 == c3)
    results["compatibility_criteria"] = {"agree": agree, "trials": trials}

    worst_dm = 0.0
    for t in range(trials):
        s = subseed(seed, "lattice-dm", t)
        rng = np.random.default_rng(s)
        family = [
            sub.random_subspace(d, int(rng.integers(1, d)), s + j) for j in range(3)
        ]
        joined = sub.join(sub.join(family[0], family[1], tol), family[2], tol)
        met = sub.meet(sub.meet(family[0], family[1], tol), family[2], tol)
        lhs1 = sub.meet(
            sub.meet(sub.ortho(family[0], tol), sub.ortho(family[1], tol), tol),
            sub.ortho(family[2], tol),
            tol,
        )
        lhs2 = sub.join(
            sub.join(sub.ortho(family[0], tol), sub.ortho(family[1], tol), tol),
            sub.ortho(family[2], tol),
            tol,
        )
        worst_dm = max(
            worst_dm,
            sub.projector_distance(lhs1, sub.ortho(joined, tol)),
            sub.projector_distance(lhs2, sub.ortho(met, tol)),
        )
    results["de_morgan"] = {"worst_residual": worst_dm, "holds": worst_dm < 1e-8}

    holds_mp = True
    for t in range(max(1, trials // 10)):
        s = subseed(seed, "lattice-mp", t)
        rng = np.random.default_rng(s)
        p = sub.random_subspace(d, int(rng.integers(1, d)), s)
        q = sub.random_subspace(d, int(rng.integers(1, d)), s + 1)
        rep = laws.is_modular_pair(p, q, samples=8, seed=s, tol=tol)
        holds_mp = holds_mp and rep.holds
    results["modular_pairs"] = {"holds": holds_mp}

    holds_cov = True
    for t in range(max(1, trials // 10)):
        s = subseed(seed, "lattice-cov", t)
        rng = np.random.default_rng(s)
        a = sub.random_subspace(d, int(rng.integers(0, d - 1)), s)
        ray = sub.Ray.from_vector(random_vector(d, s + 1))
        if sub.meet(a, ray.subspace, tol).dim != 0:
            continue
        rep = laws.check_covering(ray, a, tol)
        holds_cov = holds_cov and rep.holds
    results["covering"] = {"holds": holds_cov}

    results["expected_pattern"] = (
        results["orthomodular"]["holds"]
        and failures > 0
        and not results["nondistributivity_witness"]["holds"]
        and agree
        and results["de_morgan"]["holds"]
        and holds_mp
        and holds_cov
    )
    return results


def _classical_lattice_report(omega: int, tol: Tolerance) -> dict:
    space = cl.PhaseSpace(tuple(f"w{k}" for k in range(omega)))
    props = list(cl.all_props(space))
    ok_dist = all(
        laws.check_triple_distributive(a, b, c).holds
        for a in props
        for b in props
        for c in props
    )
    ok_om = all(laws.check_orthomodular(p, q).holds for p in props for q in props)
    ok_absorb = all(
        cl.prop_or(a, cl.prop_and(a, b)).members == a.members
        and cl.prop_and(a, cl.prop_or(a, b)).members == a.members
        for a in props
        for b in props
    )
    atoms = cl.classical_atoms(space)
    ok_atomic = all(
        any(p.contains(atom) for atom in atoms) for p in props if p.members
    )
    ok_dm = all(
        cl.prop_not(cl.prop_or(a, b)).members
        == cl.prop_and(cl.prop_not(a), cl.prop_not(b)).members
        for a in props
        for b in props
    )
    return {
        "omega": omega,
        "prop_count": len(props),
        "distributive": ok_dist,
        "orthomodular": ok_om,
        "absorption": ok_absorb,
        "atomic": ok_atomic,
        "de_morgan": ok_dm,
        "expected_pattern": ok_dist and ok_om and ok_absorb and ok_atomic and ok_dm,
    }


def cmd_lattice_check(args) -> int:
    tol = _tolerance()
    if args.classical:
        results = _classical_lattice_report(args.omega, tol)
    else:
        results = _quantum_lattice_report(args.dim1, args.trials, args.seed, tol)
    report = {
        "schema": SCHEMA,
        "command": "lattice-check",
        "config": {
            "classical": args.classical,
            "dim1": args.dim1,
            "omega": args.omega,
            "trials": args.trials,
            "seed": args.seed,
        },
        "results": results,
    }
    _emit(report, args.output)
    return 0 if results["expected_pattern"] else 1


def cmd_composite_verify(args) -> int:
    tol = _tolerance()
    if args.classical:
        s1 = cl.PhaseSpace(tuple(f"a{k}" for k in range(args.n1)))
        s2 = cl.PhaseSpace(tuple(f"b{k}" for k in range(args.n2)))
        h1 = cl.canonical_h_classical(1, s1, s2)
        h2 = cl.canonical_h_classical(2, s1, s2)
        _, iso = cl.product_space_isomorphism(s1, s2, h1, h2)
        results = {"classical": iso.to_json()}
        passed = iso.passed
    else:
        twist = None
        if args.twist:
            twist = random_unitary(args.dim1 * args.dim2, subseed(args.seed, "twist", 0))
        h1 = canonical_h(1, args.dim1, args.dim2, twist=twist, conjugate=args.conjugate_h1, tol=tol)
        h2 = canonical_h(2, args.dim1, args.dim2, twist=twist, conjugate=args.conjugate_h2, tol=tol)
        axioms = verify_axioms(h1, h2, trials=args.trials, seed=args.seed, tol=tol)
        iso = verify_tensor_isomorphism(
            h1, h2, trials=args.trials, seed=args.seed, tol=tol, axiom_trials=max(10, args.trials // 2)
        )
        results = {
            "axioms": [r.to_json() for r in axioms],
            "isomorphism": iso.to_json(),
        }
        passed = all(r.passed for r in axioms) and iso.passed
    report = {
        "schema": SCHEMA,
        "command": "composite-verify",
        "config": {
            "classical": args.classical,
            "dim1": args.dim1,
            "dim2": args.dim2,
            "n1": args.n1,
            "n2": args.n2,
            "trials": args.trials,
            "seed": args.seed,
            "twist": args.twist,
            "conjugate_h1": args.conjugate_h1,
            "conjugate_h2": args.conjugate_h2,
        },
        "results": results,
    }
    _emit(report, args.output)
    return 0 if passed else 1


def cmd_truth_demo(args) -> int:
    tol = _tolerance()
    model = OscillatorModel(n_max=args.nmax)
    dim = model.levels
    state = np.zeros(dim, dtype=complex)
    state[0] = np.sqrt(3.0 / 4.0)
    state[1] = np.sqrt(1.0 / 4.0)
    ground = proposition_from_eigenstates({0}, dim)
    tv = truth_value(state, ground, tol)
    tv_complement = truth_value(state, sub.ortho(ground, tol), tol)
    results: dict = {
        "state": [[float(z.real), float(z.imag)] for z in state],
        "proposition": [0],
        "value": tv.value,
        "classification": tv.classification,
        "complement_value": tv_complement.value,
        "complement_classification": tv_complement.classification,
    }
    if args.energies:
        _, _, _, hamiltonian = ladder_operators(model)
        results["energies"] = [float(e) for e in energies(model)]
        results["hamiltonian_diagonal"] = [float(x.real) for x in np.diag(hamiltonian)]
    if args.eigenfunctions:
        if not args.csv:
            print("--eigenfunctions requires --csv PATH", file=sys.stderr)
            return 2
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x"] + [f"psi{n}" for n in range(dim)])
            columns = [hermite_eigenfunction(model, n) for n in range(dim)]
            for row, x in enumerate(model.grid):
                writer.writerow([f"{x:.12g}"] + [f"{col[row]:.12g}" for col in columns])
        results["eigenfunctions_csv"] = args.csv
    if args.curve_csv:
        times = [k * 0.05 for k in range(args.curve_samples)]
        sample = cl.sample_oscillator_curve(1.0, 0.0, 1.0, 1.0, times)
        with open(args.curve_csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["t", "x", "p"])
            for t, (x, p) in zip(sample.times, sample.states):
                writer.writerow([f"{t:.12g}", f"{x:.12g}", f"{p:.12g}"])
        results["curve_csv"] = args.curve_csv
    report = {
        "schema": SCHEMA,
        "command": "truth-demo",
        "config": {"nmax": args.nmax},
        "results": results,
    }
    _emit(report, args.output)
    ok = abs(tv.value - 0.75) < 1e-12 and abs(tv_complement.value - 0.25) < 1e-12
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthologic",
        description="verification suites for classical and quantum propositional systems",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_lat = subparsers.add_parser("lattice-check", help="lattice-law verification")
    p_lat.add_argument("--dim1", type=int, default=3, help="ambient dimension (quantum)")
    p_lat.add_argument("--trials", type=int, default=200)
    p_lat.add_argument("--seed", type=int, default=0)
    p_lat.add_argument("--classical", action="store_true")
    p_lat.add_argument("--omega", type=int, default=4, help="|phase space| (classical)")
    p_lat.add_argument("--output", default=None)
    p_lat.add_argument("--format", choices=["json"], default="json")
    p_lat.set_defaults(func=cmd_lattice_check)

    p_comp = subparsers.add_parser("composite-verify", help="composite-system verification")
    p_comp.add_argument("--dim1", type=int, default=3)
    p_comp.add_argument("--dim2", type=int, default=3)
    p_comp.add_argument("--trials", type=int, default=50)
    p_comp.add_argument("--seed", type=int, default=0)
    p_comp.add_argument("--twist", action="store_true", help="twist by a seeded random unitary")
    p_comp.add_argument("--conjugate-h1", action="store_true", dest="conjugate_h1")
    p_comp.add_argument("--conjugate-h2", action="store_true", dest="conjugate_h2")
    p_comp.add_argument("--classical", action="store_true")
    p_comp.add_argument("--n1", type=int, default=2, help="|first phase space| (classical)")
    p_comp.add_argument("--n2", type=int, default=3, help="|second phase space| (classical)")
    p_comp.add_argument("--output", default=None)
    p_comp.set_defaults(func=cmd_composite_verify)

    p_truth = subparsers.add_parser("truth-demo", help="oscillator truth-value demo")
    p_truth.add_argument("--nmax", type=int, default=8)
    p_truth.add_argument("--energies", action="store_true")
    p_truth.add_argument("--eigenfunctions", action="store_true")
    p_truth.add_argument("--csv", default=None)
    p_truth.add_argument("--curve-csv", default=None, dest="curve_csv")
    p_truth.add_argument("--curve-samples", type=int, default=200, dest="curve_samples")
    p_truth.add_argument("--output", default=None)
    p_truth.set_defaults(func=cmd_truth_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lattice-check":
        if not args.classical and args.dim1 < 2:
            parser.error("--dim1 must be at least 2 for the quantum branch")
        if args.classical and args.omega < 1:
            parser.error("--omega must be at least 1")
    if args.command == "composite-verify":
        if not args.classical and (args.dim1 < 3 or args.dim2 < 3):
            parser.error("--dim1/--dim2 must be at least 3 for the quantum branch")
        if args.classical and (args.n1 < 1 or args.n2 < 1):
            parser.error("--n1/--n2 must be at least 1")
    try:
        return args.func(args)
    except OrthologicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
