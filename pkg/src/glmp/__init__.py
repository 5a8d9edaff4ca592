"""Fuzzy-logic behaviour scoring of short videos.

Raw multimodal measures are fuzzified into linguistic perceptions, aggregated
up a 43-node perception graph into Big-5 behaviour scores, combined with a
Choquet integral into a single suspicion-of-disinformation value, and rendered
as hierarchical natural-language reports.
"""

from .choquet import (
    BEHAVIOURS,
    Capacity,
    ProfileSets,
    SuspicionResult,
    SuspicionSets,
    choquet_integral,
    suspicion_label,
    validate_capacity,
)
from .fuzzy import (
    ConfigError,
    FuzzyPartition,
    InputError,
    LabelWeights,
    MembershipFunction,
    RuleBase,
    WeightVector,
    defuzzify_centroid,
    validate_partition,
    weighted_average,
)
from .measures import (
    BatchResult,
    MeasureSchema,
    MeasureSet,
    batch_evaluate,
    parse_measures,
    parse_measures_file,
)
from .model import (
    Assessment,
    EvaluationError,
    ModelGraph,
    PerceptionNode,
    TreeNode,
    assess,
    default_model,
    evaluate,
    load_model,
    load_model_file,
    validate_model,
    verify_tree,
)
from .report import (
    CompletionClient,
    EnhancedReport,
    Prompt,
    PromptConfig,
    enhance_report,
    generate_prompt,
    render_report,
)

__version__ = "0.1.0"
