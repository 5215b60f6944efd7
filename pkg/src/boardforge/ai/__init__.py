"""Agents and solvers: random play through exact solvers at desk scale."""

from .agents import Agent, greedy_eval, is_agent_spec, make_agent
from .search import NodeCounter, alphabeta

__all__ = [
    "Agent",
    "NodeCounter",
    "alphabeta",
    "greedy_eval",
    "is_agent_spec",
    "make_agent",
]
