"""Symboleo contract-specification toolkit.

Parsing, semantic linting, weighted error scoring, prompt assembly and
model-response handling for Symboleo legal-contract specifications.
"""

from symboleo_toolkit._core import (
    EQUIVALENCE_MARGIN,
    AnnotationError,
    PromptError,
    __version__,
    assemble_prompt,
    canonical,
    equivalent,
    extract_code,
    frequency,
    lint,
    prompt_matrix,
    score,
    split_prompt,
    taxonomy,
)

__all__ = [
    "EQUIVALENCE_MARGIN",
    "AnnotationError",
    "PromptError",
    "__version__",
    "assemble_prompt",
    "canonical",
    "equivalent",
    "extract_code",
    "frequency",
    "lint",
    "prompt_matrix",
    "score",
    "split_prompt",
    "taxonomy",
]
