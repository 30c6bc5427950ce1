"""
Product-state classifiers: discretized naive Bayes, k-NN, voting ensemble
"""

from .classifier import Classifier, Prediction
from .discretization import (DiscretizationModel, EQUAL_FREQUENCY, EQUAL_WIDTH,
                             fit_equal_frequency, fit_equal_width, fit_discretization,
                             discretize, discretize_dataset)
from .naive_bayes import (NaiveBayesModel, nb_train, nb_predict, rank_attributes,
                          normalized_mutual_information)
from .knn import KnnModel, knn_train, knn_predict
from .ensemble import EnsembleModel, ensemble_predict, build_default_ensemble
from .evaluation import EvalReport, evaluate, split_holdout, leave_one_out, predict_dataset
from .persistence import save_model, load_model, MODEL_FORMAT, MODEL_VERSION

__all__ = [
    'Classifier', 'Prediction',
    'DiscretizationModel', 'EQUAL_FREQUENCY', 'EQUAL_WIDTH',
    'fit_equal_frequency', 'fit_equal_width', 'fit_discretization',
    'discretize', 'discretize_dataset',
    'NaiveBayesModel', 'nb_train', 'nb_predict', 'rank_attributes',
    'normalized_mutual_information',
    'KnnModel', 'knn_train', 'knn_predict',
    'EnsembleModel', 'ensemble_predict', 'build_default_ensemble',
    'EvalReport', 'evaluate', 'split_holdout', 'leave_one_out', 'predict_dataset',
    'save_model', 'load_model', 'MODEL_FORMAT', 'MODEL_VERSION',
]
