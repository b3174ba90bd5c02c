"""Minimal comprehensive Groebner bases for parametric polynomial ideals."""

from .cgs import Branch, CGSResult, cgs, extract_cgb
from .groebner import buchberger, normal_form
from .minimal import (check_essential, check_in_branch, mcgb_main, mcgb_simpl,
                      preprocess, set_order_compare, subset_is_cgb,
                      update_cgs)
from .oracle import (Specialization, confirm_witness, is_groebner,
                     random_system, sample_in, specialize, verify_result)
from .parser import ParseError, parse_poly, parse_problem
from .poly import Polynomial, Ring, poly_compare, poly_sorted
from .render import payload, problem_text, render, render_payload
from .segments import CoeffStatus, Segment

__all__ = [
    "Branch", "CGSResult", "CoeffStatus", "ParseError", "Polynomial", "Ring",
    "Segment", "Specialization", "buchberger", "cgs", "check_essential",
    "check_in_branch", "confirm_witness", "extract_cgb", "is_groebner",
    "mcgb_main", "mcgb_simpl", "normal_form", "parse_poly", "parse_problem",
    "payload", "poly_compare", "poly_sorted", "preprocess", "problem_text",
    "random_system", "render", "render_payload", "sample_in",
    "set_order_compare", "specialize", "subset_is_cgb", "update_cgs",
    "verify_result",
]
