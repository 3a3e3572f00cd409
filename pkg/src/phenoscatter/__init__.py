"""Turn ontology-coded, labeled observations into annotated 2D scatter plots.

The pipeline: parse an OBO-style ontology, collapse specific terms into
general category terms by subsumption, build a binary observation x category
matrix, embed it in 2D with t-SNE, compute class and feature centroids in
the embedding, rank features by Shapley attribution to pick which feature
centroids to draw, and render deterministic SVG figures.
"""

from phenoscatter.errors import InputError, NumericalError, PhenoscatterError

__all__ = ["InputError", "NumericalError", "PhenoscatterError"]

__version__ = "0.1.0"
