"""
Certificates for property M(k)
==============================

M(k) says that no k-list assignment has exactly one coloring.  Several
sufficient conditions are implemented; each produces a certificate that can
be serialised and checked again later.
"""

from uklc.certify import Certificate, certify, heawood, surface_index, verify_certificate
from uklc.constructions import gen_complete, gen_cycle, gen_petersen

# blocks that are cycles, cliques or complete bipartite graphs give M(2)
print(certify(gen_cycle(6).graph, 2).certificate.conclusion)

# average degree below 2k - 2
print(certify(gen_petersen().graph, 3).certificate.to_json())

# a declared planar embedding gives M(4)
K4 = gen_complete(4).graph
print(certify(K4, 4, collect_all=True).to_json()["all"])

# embeddings on other surfaces use the Heawood number
for g in range(1, 8):
    print(g, heawood(g), surface_index(g))

# nothing applies: the notes explain why
result = certify(gen_petersen().graph, 2)
print(result.certificate, *result.notes, sep="\n")

# certificates survive a JSON round trip and are re-checked against the graph
cert = certify(gen_petersen().graph, 3).certificate
print(verify_certificate(gen_petersen().graph, Certificate.from_json(cert.to_json())))
