"""Command-line entry point: ``polyweyl <verb> [flags] < payload.json``.

Each verb reads one JSON document from standard input (or ``--input``)
and writes one JSON document to standard output.  Exit status: 0 on
success, 1 on a domain error, 2 on malformed input, 3 when a checked
identity fails (``nogo``, ``cocycle-check``).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import serialize as ser
from .algebra import LocalizedElement, embed_generator, embed_refine
from .errors import DomainError
from .fock import factorizability_defect, gram_psd_check, nogo_experiment, state_eval
from .group import RescaleMap, compose, inverse, khat_apply, khat_inverse
from .lie import bracket_current, bracket_one_mode, jacobi_defect, rescaling_constants
from .oracle import oracle_matrix_check
from .poly import s_apply, t_apply, t_inv_apply

EXIT_OK, EXIT_DOMAIN, EXIT_MALFORMED, EXIT_IDENTITY = 0, 1, 2, 3


class MalformedInput(Exception):
    pass


def _complex(z):
    return {"re": z.real, "im": z.imag}


def _jsonable(obj):
    """Replace complex numbers (from oracle reports) by ``{re, im}``."""
    if isinstance(obj, complex):
        return _complex(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def cmd_compose(doc, args):
    return ser.to_json(compose(ser.group_from_json(doc["g"]), ser.group_from_json(doc["h"])))


def cmd_invert(doc, args):
    return ser.to_json(inverse(ser.group_from_json(doc["g"])))


def cmd_tw(doc, args):
    op = t_inv_apply if doc.get("inverse") else t_apply
    return ser.to_json(op(ser.scalar_from_json(doc["w"]), ser.poly_from_json(doc["P"])))


def cmd_shift(doc, args):
    return ser.to_json(s_apply(ser.scalar_from_json(doc["u"]), ser.poly_from_json(doc["P"])))


def cmd_khat(doc, args):
    m = RescaleMap(ser.scalar_from_json(doc["length"]))
    g = ser.group_from_json(doc["g"])
    out = khat_inverse(m, g) if doc.get("inverse") else khat_apply(m, g)
    return {"g": ser.to_json(out), "exact": m.exact}


def cmd_bracket(doc, args):
    x, y = doc["x"], doc["y"]
    if "a" in x:
        return ser.to_json(bracket_one_mode(ser.lie_from_json(x), ser.lie_from_json(y)))
    return ser.to_json(bracket_current(ser.current_from_json(x), ser.current_from_json(y)))


def cmd_jacobi(doc, args):
    x, y, z = (ser.current_from_json(doc[k]) for k in "xyz")
    d = jacobi_defect(x, y, z)
    return {"defect": ser.to_json(d), "zero": d.is_zero()}


def cmd_rescale_constants(doc, args):
    p = rescaling_constants(ser.scalar_from_json(doc["length"]),
                            ser.scalar_from_json(doc.get("a_I", 1)), int(doc["n"]))
    out = ser.to_json(p)
    out["structure_holds"] = p.structure_holds()
    return out


def cmd_embed(doc, args):
    partition = ser.partition_from_json(doc["partition"])
    region = ser.region_from_json(doc["region"]) if "region" in doc else partition.of
    elem = ser.algebra_from_json(doc["elem"])
    return ser.to_json(embed_generator(partition, LocalizedElement(region, elem)))


def cmd_refine(doc, args):
    t = ser.tensor_from_json(doc["tensor"])
    return ser.to_json(embed_refine(t, ser.partition_from_json(doc["finer"])))


def cmd_cocycle_check(doc, args):
    t = ser.tensor_from_json(doc["tensor"])
    mid = ser.partition_from_json(doc["mid"])
    fine = ser.partition_from_json(doc["fine"])
    two_step = embed_refine(embed_refine(t, mid), fine)
    direct = embed_refine(t, fine)
    equal = two_step == direct
    return {"equal": equal, "result": ser.to_json(direct)}, (EXIT_OK if equal else EXIT_IDENTITY)


def cmd_state(doc, args):
    spec = ser.spec_from_json(doc["spec"])
    return {"value": _complex(state_eval(spec, ser.tensor_from_json(doc["tensor"])))}


def cmd_factor_check(doc, args):
    spec = ser.spec_from_json(doc["spec"])
    region = ser.region_from_json(doc["region"])
    pi = ser.partition_from_json(doc["partition"])
    g = ser.group_from_json(doc["g"])
    return {"defect": factorizability_defect(spec, region, pi, g)}


def cmd_gram(doc, args):
    spec = ser.spec_from_json(doc["spec"])
    elems = [ser.group_from_json(e) for e in doc["elems"]]
    ev = gram_psd_check(spec, elems, ser.region_from_json(doc["region"]))
    tol = args.tolerance if args.tolerance is not None else 1e-9
    return {"min_eigenvalue": ev, "psd": ev >= -tol}


def cmd_oracle(doc, args):
    n = int(doc["n"])
    N = int(doc.get("N", 64))
    rep = oracle_matrix_check(n, ser.group_from_json(doc["g"]), ser.group_from_json(doc["h"]), N=N)
    return _jsonable(rep)


def cmd_nogo(doc, args):
    if args.a2 is not None and args.A is not None:
        raise MalformedInput("give at most one of --a2 and --A")
    a2 = None
    if args.a2 is not None:
        a2 = Fraction(args.a2)
    elif args.A is not None:
        a2 = 2 * Fraction(args.A)
    rep = nogo_experiment(args.n if args.n is not None else 1, trials=args.trials, seed=args.seed,
                          cells=args.cells, a2=a2, tolerance=args.tolerance)
    return rep, (EXIT_OK if rep["passed"] else EXIT_IDENTITY)


VERBS = {
    "compose": cmd_compose,
    "invert": cmd_invert,
    "tw": cmd_tw,
    "shift": cmd_shift,
    "khat": cmd_khat,
    "bracket": cmd_bracket,
    "jacobi": cmd_jacobi,
    "rescale-constants": cmd_rescale_constants,
    "embed": cmd_embed,
    "refine": cmd_refine,
    "cocycle-check": cmd_cocycle_check,
    "state": cmd_state,
    "factor-check": cmd_factor_check,
    "nogo": cmd_nogo,
    "gram": cmd_gram,
    "oracle": cmd_oracle,
}

NO_PAYLOAD = {"nogo"}


def build_parser():
    parser = argparse.ArgumentParser(prog="polyweyl", description=__doc__.splitlines()[0])
    parser.add_argument("verb", choices=sorted(VERBS))
    parser.add_argument("--input", "-i", help="read the payload from this file instead of stdin")
    parser.add_argument("--n", type=int)
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cells", type=int)
    parser.add_argument("--a2", help="pin the X^2 coefficient (nogo, n >= 2)")
    parser.add_argument("--A", help="pin A = a2/2 instead of a2 (nogo, n >= 2)")
    parser.add_argument("--tolerance", type=float)
    parser.add_argument("--pretty", action="store_true")
    return parser


def _read_payload(args, stdin):
    if args.verb in NO_PAYLOAD:
        return {}
    text = open(args.input).read() if args.input else stdin.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"payload is not JSON: {e}") from None
    if not isinstance(doc, dict):
        raise MalformedInput("payload must be a JSON object")
    return doc


def run(argv=None, stdin=None, stdout=None):
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)

    def emit(obj):
        if args.pretty:
            stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
        else:
            stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")

    try:
        doc = _read_payload(args, stdin)
        result = VERBS[args.verb](doc, args)
    except DomainError as e:
        emit({"error": str(e), "kind": type(e).__name__})
        return EXIT_DOMAIN
    except (MalformedInput, KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        msg = f"missing field {e}" if isinstance(e, KeyError) else str(e)
        emit({"error": msg, "kind": "MalformedInput"})
        return EXIT_MALFORMED
    status = EXIT_OK
    if isinstance(result, tuple):
        result, status = result
    emit(result)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
