"""One-call wrappers from a parsed problem to a payload or verdict.

Both the command-line driver and the HTTP service go through these, so
the two entry points cannot drift apart.
"""

from .cgs import cgs
from .minimal import check_essential, mcgb_main, mcgb_simpl
from .oracle import confirm_witness, verify_result
from .render import payload


def decomposition_payload(prob, minimal=False, simplify=False,
                          variant="least-faithful"):
    """Branch table plus universal basis; the pruned basis on request.

    Stats always count against the original decomposition, so the
    removed figure reports what minimization actually dropped.
    """
    r0 = cgs(prob.equals, prob.nonzero, prob.ideal, variant=variant)
    if not minimal:
        return payload(r0)
    run = mcgb_simpl if simplify else mcgb_main
    M, _ = run(prob.equals, prob.nonzero, prob.ideal, variant=variant)
    return payload(r0, minimal=M)


def verdict_report(prob, simplify=False, variant="least-faithful",
                   samples=10, seed=0):
    """Full verification verdict for one problem.

    Sampled specialization checks run against the original branches
    with the minimal basis included; every surviving member must then
    be essential with a confirmable witness.
    """
    r0 = cgs(prob.equals, prob.nonzero, prob.ideal, variant=variant)
    run = mcgb_simpl if simplify else mcgb_main
    M, ru = run(prob.equals, prob.nonzero, prob.ideal, variant=variant)
    report = verify_result(r0, minimal=M, samples=samples, seed=seed)
    ok = report["ok"]
    witnesses = []
    for m in M:
        verdict = check_essential(m, list(M), ru)
        confirmed = bool(verdict.essential and confirm_witness(
            m, M, verdict.witness, seed=seed))
        witnesses.append({"member": str(m),
                          "essential": bool(verdict.essential),
                          "confirmed": confirmed})
        ok = ok and confirmed
    report["witnesses"] = witnesses
    report["ok"] = ok
    return report
