"""
Committed numerals for the bundled corpus.

Every value agrees with the point-model interpreter at each endpoint
assignment of the corpus names (see test_oracle_agreement).
"""

CORPUS = {
    "zero_lit": 0,
    "two": 2,
    "three": 3,
    "add_2_3": 5,
    "double_2": 4,
    "mul_2_3": 6,
    "pred_3": 2,
    "natrec_dep": 4,
    "natrec_fun": 5,
    "beta_const": 7,
    "app_cong": 5,
    "fst_pair": 4,
    "snd_pair": 9,
    "sigma_proj": 3,
    "pair_path": 2,
    "path_app": 2,
    "path_endpoint": 5,
    "refl_app": 6,
    "sym_app": 2,
    "system_select": 3,
    "sys_type": 4,
    "glue_one_elem": 2,
    "glue_type_one": 7,
    "unglue_one": 3,
    "unglue_glue": 4,
    "comp_nat_const": 2,
    "comp_nat_sys": 1,
    "comp_nat_two": 2,
    "comp_nested": 4,
    "comp_line_cong": 6,
    "fill_end": 3,
    "comp_pi": 3,
    "comp_pi_path": 1,
    "comp_sigma": 2,
    "comp_sigma_fst": 1,
    "comp_sigma_dep": 2,
    "comp_path": 2,
    "comp_glue_open": 3,
    "transport_ua_id": 2,
    "transport_universe": 2,
    "s1_loop0": 4,
    "s1_loop1": 8,
    "s1_loop_i": 4,
    "s1_loop_meet": 3,
    "s1_comp": 0,
    "comp_glue_multi": 2,
    "comp_glue_delta": 3,
}

# witness numerals under the policy: squash takes its left side, hcomp its base
TRUNCATION = {
    "w_inc": 3,
    "w_squash_left": 1,
    "w_squash_end": 2,
    "w_fwd_inc": 1,
    "w_fwd_squash": 4,
    "w_hcomp": 6,
    "w_comp_trunc": 7,
    "w_elim": 3,
    "w_elim_squash": 3,
    "w_elim_hcomp": 2,
}

EXISTS = {"exists_pair": 4}

MUTANTS = {
    "m_unbound": "UnboundVariable",
    "m_app_nat": "Mismatch",
    "m_lam_nat": "Mismatch",
    "m_fst_nat": "Mismatch",
    "m_path_ends": "Mismatch",
    "m_system_cover": "RestrictionUnsatisfied",
    "m_system_incompat": "RestrictionUnsatisfied",
    "m_comp_start": "RestrictionUnsatisfied",
    "m_suc_type": "Mismatch",
    "m_interval_scope": "UnboundVariable",
    "m_glue_face": "RestrictionUnsatisfied",
    "m_glue_image": "RestrictionUnsatisfied",
    "m_unglue_face": "RestrictionUnsatisfied",
    "m_unglue_equiv": "RestrictionUnsatisfied",
}

PATH01 = ("p_const", "p_comp", "p_system")
