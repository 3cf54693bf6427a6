# Copyright Contributors to the cubemap project
# SPDX-License-Identifier: Apache-2.0
"""Partial-cube processor labels and label swapping for task mappings."""

import json as _json

from ._cubemap import (  # noqa: F401
    CubemapError,
    Graph,
    NotPartialCube,
    PcubeLabeling,
    balance_check,
    bfs_all_pairs,
    cli,
    coco,
    contract_blocks,
    dim_ga,
    edge_cut,
    generate_topology,
    greedy_allc,
    greedy_min,
    grow_partition,
    identity_mapping,
    label_partial_cube,
    parse_metis,
    random_geometric_graph,
    run_timer,
    to_metis,
    verify_isometry,
)
from ._cubemap import aggregate_json as _aggregate_json


def aggregate(runs):
    """Nine quotients per instance and their geometric means, as a dict."""
    return _json.loads(_aggregate_json(list(runs)))
