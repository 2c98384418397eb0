"""Singularities and Kazhdan-Lusztig-Vogan polynomials of GL(p) x GL(q)-orbit
closures on the flag variety, computed from clans and path diagrams."""

from .clans import (
    Clan,
    ClanError,
    FsPattern,
    avoids_1212,
    canonical_string,
    clan_count,
    clan_from_fs,
    clan_length,
    contains_pattern,
    fs_pattern,
    generate_clans,
    negative,
    parse_clan,
    u_perm,
    v_perm,
    yamamoto_u,
)
from .kl import build_capacity_tree, count_labellings, hecke_apply_gen, kl_poly, ls_kl
from .klv import (
    CaseKind,
    classify_root,
    closure_order,
    klv_richardson,
    klv_table,
    module_apply_gen,
)
from .path_diagram import (
    clan_diagram,
    components,
    corner_capacity,
    diagram_contains,
    render_ascii,
    singular_corners,
)
from .permutation import (
    LatticePath,
    bruhat_leq,
    compose,
    coxeter_length,
    inverse,
    is_cograssmannian,
    is_grassmannian,
    lattice_path,
    w0,
    w0K,
)
from .poly import LaurentHalfPoly, QPoly
from .singularity import (
    TriState,
    Verdict,
    is_gorenstein,
    is_lci,
    is_smooth,
    local_profile,
    non_gorenstein_locus,
    non_lci_locus,
    singular_locus,
)

__version__ = "0.1.0"
