"""Command-line front end.

Subcommands mirror the library's verification pipeline:
validate-generators, discover, apply, verify-lemma, verify-theorem,
check.  Exit codes: 0 success, 1 a verification failed, 2 usage or
parse error.
"""

import argparse
import json
import random
import sys

from .homology import abelianization_matrix, serialize_matrix
from .powell import discover, power_realizations, slide_profile, spin_profile
from .twists import twist_library, validate_library
from .words import format_word, multiply, parse_word, reduce as word_reduce
from .verify import (Toggles, certificate_check, evaluate_expression,
                     generator_env, lemma_check, load_certificate,
                     save_certificate, theorem_verify)


def _parse_toggles(text):
    """Parse 't1=R,t4=-1,t6=2' into a restriction dict."""
    if not text:
        return {}
    out = {}
    for piece in text.split(","):
        key, _, val = piece.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in ("t1", "t3", "t4", "t5", "t6"):
            raise ValueError("unknown toggle %r" % key)
        out[key] = val if key == "t1" else int(val)
    return out


def _toggles_from(restrict):
    base = Toggles()
    return Toggles(
        t1=restrict.get("t1", base.t1), t3=restrict.get("t3", base.t3),
        t4=restrict.get("t4", base.t4), t5=restrict.get("t5", base.t5),
        t6=restrict.get("t6", base.t6))


def _emit(payload, text_lines, args, path=None):
    out = (json.dumps(payload, indent=1, sort_keys=True) + "\n"
           if args.format == "json" else "\n".join(text_lines) + "\n")
    if path:
        with open(path, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _cert_env(cert_path, toggles):
    from .aut import MappingClassModel, parse_endo
    from .verify import compose_word
    cert = load_certificate(cert_path)
    env = generator_env(None, None, toggles)
    for name in ("D_theta", "D_nu"):
        rec = cert["models"][name]
        env[name] = MappingClassModel(name, parse_endo(rec["images"]),
                                      parse_endo(rec["inverse_images"]))
    eta = env["D_eta12"]
    m = compose_word([eta, env["D_nu"], eta.inverse()], toggles.t1)
    env["D_nu'"] = MappingClassModel("D_nu'", m.forward, m.backward)
    return env


def cmd_validate(args):
    rep = validate_library(perturb=args.inject_broken or None)
    rec = power_realizations(rep["accepted_sign"]) if rep["ok"] else {}
    lines = [
        "accepted sign: %s (unique: %s)" % (rep["accepted_sign"], rep["unique"]),
    ]
    detail = rep["per_sign"].get(rep["accepted_sign"]) if rep["ok"] else None
    if detail:
        lines.append("chain exponent: %+d" % detail["chain_exp"])
        for name, ok in sorted(detail["checks"].items()):
            lines.append("  %-40s %s" % (name, "ok" if ok else "FAIL"))
    if rec:
        lines.append("power realizations: %s" % rec)

    battery_ok = True
    if args.selftest:
        rng = random.Random(args.seed)
        battery_ok = _property_battery(rng, args.selftest)
        lines.append("property battery (%d cases, seed %s): %s"
                     % (args.selftest, args.seed, "ok" if battery_ok else "FAIL"))

    ok = rep["ok"] and battery_ok and (not rec or rec.get("ok"))
    lines.append("validate-generators: %s" % ("ok" if ok else "FAIL"))
    _emit({"library": rep, "power_realizations": rec,
           "battery_ok": battery_ok, "seed": args.seed, "ok": ok},
          lines, args, path=args.out)
    return 0 if ok else 1


def _random_word(rng, maxlen):
    n = rng.randint(0, maxlen)
    w = []
    for _ in range(n):
        x = rng.choice((1, -1, 2, -2, 3, -3, 4, -4))
        w.append(x)
    return word_reduce(w)


def _property_battery(rng, cases):
    lib = twist_library()
    names = sorted(lib)
    for _ in range(cases):
        m = lib[rng.choice(names)]
        u = _random_word(rng, 12)
        v = _random_word(rng, 12)
        if m.forward(multiply(u, v)) != multiply(m.forward(u), m.forward(v)):
            return False
        if m.backward(m.forward(u)) != u:
            return False
    return True


def cmd_discover(args):
    restrict = _parse_toggles(args.toggles)
    if args.name == "D_theta":
        prof = slide_profile(direction=restrict.get("t4", 1))
    else:
        prof = spin_profile(direction=restrict.get("t5", 1))
    if args.max_image_len:
        from dataclasses import replace
        prof = replace(prof, max_image_len=args.max_image_len)
    cands = discover(prof)
    lines = ["%s: %d candidate(s), profile max image length %d"
             % (prof.name, len(cands), prof.max_image_len)]
    payload = {"profile": prof.to_config(), "candidates": []}
    for i, m in enumerate(cands):
        lines.append("")
        lines.append("candidate %d (max image length %d):"
                     % (i, m.forward.max_image_len()))
        lines.extend("  " + ln for ln in m.forward.serialize().splitlines())
        payload["candidates"].append({
            "images": m.forward.serialize(),
            "inverse_images": m.backward.serialize(),
            "shadow": serialize_matrix(abelianization_matrix(m.forward)),
        })
    _emit(payload, lines, args, path=args.out)
    return 0 if cands else 1


def cmd_apply(args):
    restrict = _parse_toggles(args.toggles)
    toggles = _toggles_from(restrict)
    if args.cert:
        env = _cert_env(args.cert, toggles)
    else:
        env = generator_env(None, None, toggles)
    model = evaluate_expression(args.expr, env, toggles.t1)
    w = parse_word(args.word)
    img = model.forward(w)
    _emit({"expr": args.expr, "word": format_word(w),
           "image": format_word(img)}, [format_word(img)], args)
    return 0


def cmd_verify_lemma(args):
    restrict = _parse_toggles(args.toggles)
    toggles = _toggles_from(restrict)
    if args.cert:
        env = _cert_env(args.cert, toggles)
    else:
        theta = discover(slide_profile())
        nu = discover(spin_profile())
        if not theta or not nu:
            sys.stderr.write("no discovered candidates\n")
            return 1
        env = generator_env(theta[args.theta_index], nu[args.nu_index],
                            toggles)
    rep = lemma_check(env, toggles)
    lines = ["lemma (%s):" % rep["word_C"]]
    for c in rep["curves"]:
        lines.append("  %-8s C: %-30s nu': %-30s %s"
                     % (c["curve"], c["image_C"], c["image_nu_prime"],
                        "equal" if c["equal"] else "DIFFER"))
    lines.append("lemma: %s" % ("ok" if rep["ok"] else "FAIL"))
    _emit(rep, lines, args, path=args.out)
    return 0 if rep["ok"] else 1


def cmd_verify_theorem(args):
    restrict = _parse_toggles(args.toggles)
    cert, trace = theorem_verify(
        max_exp=args.max_exp, restrict=restrict or None,
        progress=(lambda s: sys.stderr.write(s + "\n")) if args.verbose else None)
    if cert is None:
        lines = ["verify-theorem: FAIL (no configuration verified)",
                 "failure trace (%d configurations):" % len(trace)]
        for t in trace:
            lines.append("  %s theta[%d] nu[%d]: failed at %s"
                         % (t["toggles"], t["theta_index"], t["nu_index"],
                            t["stage"]))
        _emit({"ok": False, "trace": trace}, lines, args)
        return 1
    if args.out:
        save_certificate(cert, args.out)
    lines = [
        "verified with toggles %s" % cert["toggles"],
        "slide candidate %d of %d, spin candidate %d of %d"
        % (cert["profiles"]["D_theta"]["chosen_index"],
           cert["profiles"]["D_theta"]["candidates"],
           cert["profiles"]["D_nu"]["chosen_index"],
           cert["profiles"]["D_nu"]["candidates"]),
        "residual pants word: %s" % cert["residual"]["pants_word"],
        "final word: %s" % cert["theorem"]["final_word"],
        "expanded:   %s" % cert["theorem"]["final_word_expanded"],
    ]
    if args.out:
        lines.append("certificate written to %s" % args.out)
    _emit(cert, lines, args)
    return 0


def cmd_check(args):
    cert = load_certificate(args.certificate)
    ok, rep = certificate_check(cert)
    lines = []
    for s in rep["steps"]:
        lines.append("  %-28s %s" % (s["name"], "ok" if s["ok"] else "FAIL"))
    lines.append("check: %s" % ("ok" if ok else
                                "FAIL at %s" % rep["first_failure"]))
    _emit(rep, lines, args, path=args.out)
    return 0 if ok else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="goeritz",
        description="verify the slide/spin factorization on the genus-2 "
                    "one-holed surface")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if out:
            p.add_argument("--out", default=None,
                           help="write the report to this path")

    p = sub.add_parser("validate-generators",
                       help="relation and shadow battery for the twist library")
    p.add_argument("--selftest", type=int, default=0, metavar="N",
                   help="additionally run N random property cases")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-broken", default="", metavar="TWIST",
                   help="debug: break the named twist first (must then fail)")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("discover", help="search a generator profile")
    p.add_argument("name", choices=("D_theta", "D_nu"))
    p.add_argument("--max-image-len", type=int, default=None)
    p.add_argument("--toggles", default="")
    common(p)
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("apply", help="apply a generator word to a curve word")
    p.add_argument("expr", help="e.g. \"D_omega^2 T_a1^-1\"")
    p.add_argument("word", help="e.g. \"a1 b1^-2\"")
    p.add_argument("--cert", default=None,
                   help="certificate supplying D_theta and D_nu")
    p.add_argument("--toggles", default="")
    common(p, out=False)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify-lemma",
                       help="compare C and the conjugated spin on the four curves")
    p.add_argument("--toggles", default="")
    p.add_argument("--cert", default=None)
    p.add_argument("--theta-index", type=int, default=0)
    p.add_argument("--nu-index", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_verify_lemma)

    p = sub.add_parser("verify-theorem",
                       help="full verification; emits a certificate")
    p.add_argument("--max-exp", type=int, default=4)
    p.add_argument("--toggles", default="")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--out", default=None,
                   help="write the certificate to this path")
    common(p, out=False)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("check", help="re-evaluate a certificate (no search)")
    p.add_argument("certificate")
    common(p)
    p.set_defaults(func=cmd_check)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, FileNotFoundError, json.JSONDecodeError) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
