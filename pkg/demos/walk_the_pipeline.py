"""End-to-end narrative: discover the two missing generators, check the
lemma on the four curves, peel off the boundary correction, and emit the
certificate.

The slide search is exhaustive and takes a little while (twenty seconds
or so); progress lines keep you company.
"""

import argparse
import sys
import time

from goeritz import (discover, slide_profile, spin_profile, theorem_verify,
                     certificate_check, save_certificate)
from goeritz.words import format_word

ap = argparse.ArgumentParser()
ap.add_argument("--out", default="certificate.json")
args = ap.parse_args()

t0 = time.time()
print("discovering the slide generator D_theta (exhaustive search)...")
theta = discover(slide_profile())
print("  %d candidate(s) in %.1fs" % (len(theta), time.time() - t0))
for i, m in enumerate(theta):
    print("  candidate %d: a2 -> %s" % (i, format_word(m.forward.images[3])))

t1 = time.time()
print("\ndiscovering the spin class D_nu...")
nu = discover(spin_profile())
print("  %d candidate(s) in %.1fs" % (len(nu), time.time() - t1))

print("\nsweeping conventions until the lemma, the residual and the "
      "pants search all pass...")
cert, trace = theorem_verify(theta_candidates=theta, nu_candidates=nu,
                             progress=lambda s: print("  " + s))
if cert is None:
    print("nothing verified; %d failures recorded" % len(trace))
    sys.exit(1)

print("\nrejected along the way:")
for t in trace:
    print("  theta[%d] nu[%d]: failed at %s stage"
          % (t["theta_index"], t["nu_index"], t["stage"]))

print("\nlemma traces (identical canonical cyclic images):")
for c in cert["lemma"]["curves"]:
    print("  %-8s -> %s" % (c["curve"], c["image_C"]))

print("\nresidual pants word:", cert["residual"]["pants_word"])
print("final word:", cert["theorem"]["final_word"])
print("expanded:  ", cert["theorem"]["final_word_expanded"])

save_certificate(cert, args.out)
ok, rep = certificate_check(cert)
print("\ncertificate written to %s; recheck: %s" % (args.out, ok))
