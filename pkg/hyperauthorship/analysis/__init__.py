from .comparison import (
    ComparisonRow,
    ComparisonReport,
    NetworkSuite,
    Table,
    TABLE1_METRICS,
    percent_change,
    centrality_rows,
    compare_networks,
    best_weighting,
)
from .ego import (
    EgoNetwork,
    Ranking,
    CaseStudyGrid,
    EgoProfile,
    Quadrant,
    QUADRANTS,
    Side,
    extract_ego,
    rank_by_degree,
    select_case_studies,
    ego_centralities,
    ego_centrality_suite,
    ego_profile,
)

__all__ = [
    "ComparisonRow",
    "ComparisonReport",
    "NetworkSuite",
    "Table",
    "TABLE1_METRICS",
    "percent_change",
    "centrality_rows",
    "compare_networks",
    "best_weighting",
    "EgoNetwork",
    "Ranking",
    "CaseStudyGrid",
    "EgoProfile",
    "Quadrant",
    "QUADRANTS",
    "Side",
    "extract_ego",
    "rank_by_degree",
    "select_case_studies",
    "ego_centralities",
    "ego_centrality_suite",
    "ego_profile",
]
