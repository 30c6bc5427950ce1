"""
Versioned JSON model documents.

    {"format": "ilsi-model", "version": 1, "kind": "nb" | "knn" | "ensemble", "model": {...}}

Floats are written with full repr precision so a reloaded model predicts
bit-identically.
"""

import json
from pathlib import Path
from typing import Dict, Union

from ..errors import ModelFormatError
from .classifier import Classifier

MODEL_FORMAT = 'ilsi-model'
MODEL_VERSION = 1


def _registry() -> Dict[str, type]:
    from .ensemble import EnsembleModel
    from .knn import KnnModel
    from .naive_bayes import NaiveBayesModel
    return {cls.kind: cls for cls in (NaiveBayesModel, KnnModel, EnsembleModel)}


def model_to_document(model: Classifier) -> Dict:
    if model.kind not in _registry():
        raise ModelFormatError(f"Cannot serialise model of kind '{model.kind}'")
    return {'format': MODEL_FORMAT, 'version': MODEL_VERSION,
            'kind': model.kind, 'model': model.to_dict()}


def model_from_document(document: Dict) -> Classifier:
    """
    Raises:
        ModelFormatError: wrong format tag, unknown version or kind, missing fields
    """
    if not isinstance(document, dict) or document.get('format') != MODEL_FORMAT:
        raise ModelFormatError(f"Not an {MODEL_FORMAT} document")
    if document.get('version') != MODEL_VERSION:
        raise ModelFormatError(f"Unsupported model version: {document.get('version')!r}")
    kind = document.get('kind')
    registry = _registry()
    if kind not in registry:
        raise ModelFormatError(f"Unknown model kind: {kind!r}")
    try:
        return registry[kind].from_dict(document['model'])
    except (KeyError, TypeError) as exc:
        raise ModelFormatError(f"Malformed {kind} model: missing or invalid field {exc}") from exc


def save_model(model: Classifier, path: Union[str, Path]) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(model_to_document(model), f, indent=2, sort_keys=True)
        f.write("\n")


def load_model(path: Union[str, Path]) -> Classifier:
    with open(path, 'r', encoding='utf-8') as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    try:
        return model_from_document(document)
    except ModelFormatError as exc:
        raise ModelFormatError(f"{path}: {exc}") from exc
