"""Analysis fragments and the composed report, as plain JSON-ready dicts."""

import hashlib
from functools import cached_property

from . import __version__
from .bundle import (characteristic_class, chern1_de_rham, class_verdicts, h1_rank,
                     hodge_h10_h01, total_space_cohomology)
from .config import normalize_to_odd_balanced, skeleton_counts, validate
from .gale import check_gale_datum, complex_points, good_gale_dual, virtual_chamber
from .jsonio import configuration_to_json, parse_period
from .metrics import balanced_verdict, is_polytopal, skt_verdict
from .toric_cohomology import (betti_stanley, class2_text, class2_to_json,
                               is_toric_calabi_yau, minimal_nonfaces, presentation)


class Analysis:
    """Lazily computed invariants of one input configuration."""

    def __init__(self, cfg, gale=None, period=None, raw=b""):
        self.input_cfg = cfg
        self.gale_override = gale
        self.period_spec = period
        self.raw = raw

    @cached_property
    def cfg(self):
        return normalize_to_odd_balanced(self.input_cfg)

    @cached_property
    def gale(self):
        if self.gale_override is not None:
            return check_gale_datum(self.cfg, self.gale_override)
        return good_gale_dual(self.cfg)

    @cached_property
    def pres(self):
        return presentation(self.cfg)

    @cached_property
    def cc(self):
        return characteristic_class(self.cfg, self.gale, self.pres)

    @cached_property
    def period(self):
        return parse_period(self.period_spec, self.gale.m)

    @cached_property
    def polytopal(self):
        return is_polytopal(self.cfg)

    # -- fragments ---------------------------------------------------------

    def validation(self):
        rep = validate(self.input_cfg)
        c = self.input_cfg
        return {"validation": rep.to_json(), "n": c.n, "d": c.dim, "k": c.k}

    def lattice(self):
        c = self.cfg
        return {"n": c.n, "d": c.dim, "k": c.k, "m": c.m}

    def gale_fragment(self):
        gd = self.gale
        return {
            "configuration": configuration_to_json(self.cfg),
            "index_shift": self.cfg.index_shift,
            "gale": gd.to_json(),
            "virtual_chamber": [[i + 1 for i in e] for e in virtual_chamber(self.cfg)],
            "real_points": gd.real_points(),
            "period": self.period.to_json(),
            "complex_points": complex_points(gd, self.period),
        }

    def cohomology(self):
        cfg, pres = self.cfg, self.pres
        tot = total_space_cohomology(cfg, self.gale, self.cc)
        return {
            "base": {
                "h2_rank": pres.h2_rank,
                "h4_rank": pres.h4_rank,
                "betti_even": [betti_stanley(cfg, j) for j in range(cfg.dim + 1)],
                "skeleton_counts": skeleton_counts(cfg),
                "minimal_nonfaces": [[i + 1 for i in f] for f in minimal_nonfaces(cfg)],
                "toric_calabi_yau": is_toric_calabi_yau(pres),
            },
            "total_space": {
                "ranks": list(tot.ranks),
                "provenance": list(tot.provenance),
                "poincare_symmetric": tot.poincare_symmetric,
            },
        }

    def char_class(self):
        cc = self.cc
        pairs = []
        for j, (q, f) in enumerate(cc.pairs, start=1):
            pairs.append({"j": j, "class": class2_to_json(q), "text": class2_text(q),
                          "f": list(f)})
        q0 = cc.classes[0]
        return {"gamma": pairs,
                "q0": {"class": class2_to_json(q0), "text": class2_text(q0)}}

    def _c1(self):
        c1 = chern1_de_rham(self.cfg, self.gale, self.cc)
        if c1.status == "Zero":
            return {"status": "Zero"}, None
        tagged = {"status": "NonZero", "coefficient": c1.coefficient,
                  "generator": f"[{class2_text(c1.generator)}]"}
        coker = {"free_rank": c1.free_rank, "torsion": list(c1.torsion), "index": c1.index,
                 "generator_is_basis": c1.generator_is_basis}
        return tagged, coker

    def chern(self):
        tagged, coker = self._c1()
        v = class_verdicts(self.cfg, self.gale, self.cc)
        out = {
            "c1_deRham": tagged,
            "c1_aeppli": dict(tagged),
            "bott_chern_c1_vanishes": v["bott_chern_c1_vanishes"],
            "chern_vanishing_above": v["chern_vanishing_above"],
        }
        if coker is not None:
            out["c1_deRham_cokernel"] = coker
        return out

    def invariants(self):
        b1 = h1_rank(self.cfg, self.gale, self.cc)
        h10, h01 = hodge_h10_h01(self.cfg, self.gale, self.period, self.cc)
        v = class_verdicts(self.cfg, self.gale, self.cc)
        return {"b1": b1, "h10": h10, "h01": h01, "ddbar_lemma": v["ddbar_lemma"],
                "polytopal": self.polytopal}

    def balanced(self):
        return balanced_verdict(self.cfg).to_json()

    def skt(self):
        return skt_verdict(self.cfg, self.gale, self.cc, self.polytopal).to_json()

    def report(self):
        out = {
            "input": configuration_to_json(self.input_cfg),
            "input_sha256": hashlib.sha256(self.raw).hexdigest(),
            "tool_version": __version__,
            "validation": validate(self.input_cfg).to_json(),
            "lattice": self.lattice(),
        }
        out.update(self.gale_fragment())
        out.update(self.char_class())
        out.update(self.chern())
        out["cohomology"] = self.cohomology()
        out.update(self.invariants())
        out["balanced"] = self.balanced()
        out["skt"] = self.skt()
        return out
