"""Spectrum CSV and report file formats.

A spectrum file is plain CSV with '#'-prefixed metadata comment lines, then
a header row ``freq_hz,dL_re,dL_im`` and one row per frequency. Numbers use
17 significant digits so files round-trip doubles exactly. Reports are JSON.
"""

from __future__ import annotations

import json

import numpy as np

from .analysis import EquivalenceReport, SigmaDFit
from .model import InductanceSpectrum

FORMAT_VERSION = "1"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_spectrum_csv(path: str, spectrum: InductanceSpectrum, metadata: dict | None = None):
    meta = dict(spectrum.metadata)
    if metadata:
        meta.update(metadata)
    lines = [
        f"# eddyplate_spectrum_format={FORMAT_VERSION}",
        f"# model={spectrum.model_tag}",
        f"# normalized={str(spectrum.normalized).lower()}",
    ]
    for key in sorted(meta):
        lines.append(f"# {key}={meta[key]}")
    lines.append("freq_hz,dL_re,dL_im")
    for f, v in zip(spectrum.frequencies, spectrum.delta_L):
        lines.append(f"{_fmt(f)},{_fmt(v.real)},{_fmt(v.imag)}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_spectrum_csv(path: str) -> InductanceSpectrum:
    meta: dict[str, str] = {}
    freqs, re, im = [], [], []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" in body:
                    key, _, value = body.partition("=")
                    meta[key.strip()] = value.strip()
                continue
            if line.startswith("freq_hz"):
                continue
            parts = line.split(",")
            freqs.append(float(parts[0]))
            re.append(float(parts[1]))
            im.append(float(parts[2]))
    return InductanceSpectrum(
        frequencies=np.array(freqs),
        delta_L=np.array(re) + 1j * np.array(im),
        normalized=meta.get("normalized", "false") == "true",
        model_tag=meta.get("model", "unknown"),
        metadata=meta,
    )


def write_report_json(path: str, report: EquivalenceReport, extra: dict | None = None):
    payload = {
        "max_rel_error": report.max_rel_error,
        "max_rel_error_band_hz": list(report.max_rel_error_band),
        "band_filter_hz": list(report.band_filter) if report.band_filter else None,
        "n_excluded": report.n_excluded,
        "per_frequency_rel_error": [
            None if not np.isfinite(x) else x for x in report.per_frequency_rel_error
        ],
    }
    if extra:
        payload.update(extra)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_fit_json(path: str, fit: SigmaDFit, extra: dict | None = None):
    payload = {
        "sigma_d_S": fit.sigma_d,
        "alpha0_fit_per_m": fit.alpha0_fit,
        "residual_norm": fit.residual_norm,
        "iterations": fit.iterations,
        "converged": fit.converged,
    }
    if extra:
        payload.update(extra)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
