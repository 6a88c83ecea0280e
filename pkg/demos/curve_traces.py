"""Trace the four core curves through every stage of the lemma word.

Reads a certificate if one is available (run walk_the_pipeline.py or
`goeritz verify-theorem --out certificate.json` first); otherwise
discovers the generators itself.
"""

import argparse
import os

from goeritz import (Toggles, discover, generator_env, load_certificate,
                     slide_profile, spin_profile, evaluate_expression, WORD_C)
from goeritz.aut import MappingClassModel, parse_endo
from goeritz.twists import CURVES
from goeritz.words import canonical_cycle, format_word

ap = argparse.ArgumentParser()
ap.add_argument("--cert", default="certificate.json")
args = ap.parse_args()

toggles = Toggles()
if os.path.exists(args.cert):
    cert = load_certificate(args.cert)
    toggles = Toggles.from_config(cert["toggles"])
    env = generator_env(None, None, toggles)
    for name in ("D_theta", "D_nu"):
        rec = cert["models"][name]
        env[name] = MappingClassModel(name, parse_endo(rec["images"]),
                                      parse_endo(rec["inverse_images"]))
    print("using models from %s" % args.cert)
else:
    print("no certificate found; discovering (the slide part is slow)...")
    env = generator_env(discover(slide_profile())[0],
                        discover(spin_profile())[-1], toggles)

# accumulate the word C factor by factor, rightmost first
factors = WORD_C.split()
print("\nword C = %s, applied rightmost-first\n" % WORD_C)
for cn in ("mu1", "lambda1", "mu2", "lambda2"):
    w = CURVES[cn]
    print("%s = %s" % (cn, format_word(w)))
    for k in range(len(factors), 0, -1):
        partial = " ".join(factors[k - 1:])
        img = evaluate_expression(partial, env, toggles.t1).forward(w)
        print("  after %-42s %s" % (partial + ":", format_word(img)))
    print("  canonical cyclic image: %s\n"
          % format_word(canonical_cycle(img)))

nu_p = evaluate_expression("D_eta12 D_nu D_eta12^-1", env, toggles.t1)
print("compare the conjugated spin D_nu' = D_eta12 D_nu D_eta12^-1:")
for cn in ("mu1", "lambda1", "mu2", "lambda2"):
    w = CURVES[cn]
    print("  %-8s -> %s" % (cn, format_word(canonical_cycle(nu_p.forward(w)))))
