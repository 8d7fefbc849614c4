"""Schwab-Borchardt and Neuman means, with numerical certification of sharp
bounds for N_AH, N_HA, N_CA and N_AC in terms of H, A and C."""

from .carlson import rc, rf
from .certify import (
    BoundCertificate,
    SweepSpec,
    TheoremCase,
    certify_case,
    chain_check,
    ratio,
    ratio_from_means,
    sharpness_probe,
)
from .lemmas import LemmaFn, eval_lemma, limit_at
from .means import MeanKind, Parameterization, PositivePair, classical_mean, params_from_v, v_of
from .neuman import NeumanCase, n_mean, neuman, s_mean, sb, sb_via_rc

__all__ = [
    "BoundCertificate",
    "LemmaFn",
    "MeanKind",
    "NeumanCase",
    "Parameterization",
    "PositivePair",
    "SweepSpec",
    "TheoremCase",
    "certify_case",
    "chain_check",
    "classical_mean",
    "eval_lemma",
    "limit_at",
    "n_mean",
    "neuman",
    "params_from_v",
    "ratio",
    "ratio_from_means",
    "rc",
    "rf",
    "s_mean",
    "sb",
    "sb_via_rc",
    "sharpness_probe",
    "v_of",
]
