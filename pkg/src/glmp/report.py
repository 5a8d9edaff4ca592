"""Hierarchical linguistic reports, prompt generation and the optional
text-generation service client.

Rendering is deterministic: the same tree and depth always produce byte
identical text. The external service is presentation-only; any failure falls
back to the template report with a degradation notice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import requests

from .model import Assessment, ModelGraph, TreeNode

DEFAULT_INSTRUCTION = (
    "Generate a comprehensive report on the behaviours described above, "
    "using precise language and avoiding redundancy."
)
TOKEN_ENV_VAR = "GLMP_SERVICE_TOKEN"


def _sentence(template: Optional[str], name: str, label: str) -> str:
    if template:
        return template.format(name=name, Name=name.capitalize(), label=label)
    return f"{name.capitalize()} is {label}."


def _children_phrase(names: list[str]) -> str:
    if len(names) == 1:
        return names[0]
    return ", ".join(names[:-1]) + " and " + names[-1]


def render_report(g: ModelGraph, tree: TreeNode, depth: int = 5,
                  root_id: Optional[str] = None) -> str:
    """Indented root-first report: claim sentence, dependency sentence, then
    children recursively down to `depth` levels of the tree."""
    if not 1 <= depth <= 5:
        raise ValueError(f"depth must be in 1..5, got {depth}")
    start = tree
    if root_id is not None:
        for tn in tree.walk():
            if tn.id == root_id:
                start = tn
                break
        else:
            raise KeyError(f"node {root_id!r} not in tree")
    lines: list[str] = []
    _render_node(g, start, depth, 0, lines)
    return "\n".join(lines) + "\n"


def _render_node(g: ModelGraph, tn: TreeNode, depth: int, indent: int,
                 lines: list[str]) -> None:
    node = g.nodes[tn.id]
    label = tn.reported_label(g.report_tau)
    if label is None:
        text = f"{tn.name.capitalize()} could not be evaluated."
    else:
        text = _sentence(node.template, tn.name, label)
    recurse = depth > 1 and tn.children
    if recurse:
        dep = g.dependency_template.format(
            name=tn.name.capitalize(), children=_children_phrase([c.name for c in tn.children]))
        text = f"{text} {dep}"
    prefix = "" if indent == 0 else "  " * indent + "- "
    lines.append(prefix + text)
    if recurse:
        for child in tn.children:
            _render_node(g, child, depth - 1, indent + 1, lines)


@dataclass(frozen=True)
class PromptConfig:
    system_context: str = (
        "You are an analyst writing up a behavioural assessment of the "
        "speaker in a short video.")
    instruction: str = DEFAULT_INSTRUCTION
    depth: int = 5
    max_chars: int = 8000
    include_warnings: bool = False
    warning_clause: str = "Include appropriate warnings about the limitations of the assessment."


@dataclass(frozen=True)
class Prompt:
    system_context: str
    report: str
    instruction: str
    extras: tuple[str, ...] = ()

    @property
    def text(self) -> str:
        parts = [self.system_context, "", self.report, self.instruction]
        parts.extend(self.extras)
        return "\n".join(parts)


def generate_prompt(g: ModelGraph, a: Assessment,
                    ctx: PromptConfig = PromptConfig()) -> Prompt:
    """Build the text-generation prompt from an assessment.

    The embedded report carries the suspicion value and label verbatim; if
    the prompt exceeds max_chars, the deepest report levels are dropped
    first until it fits.
    """
    suspicion = a.suspicion
    header = (f"Suspicion of disinformation: {suspicion.reported_label} "
              f"(aggregated value {suspicion.value:.3f}).")
    extras = (ctx.warning_clause,) if ctx.include_warnings else ()
    depth = ctx.depth
    while True:
        report = header + "\n" + render_report(g, a.tree, depth=depth)
        prompt = Prompt(ctx.system_context, report, ctx.instruction, extras)
        if len(prompt.text) <= ctx.max_chars or depth == 1:
            return prompt
        depth -= 1


class ServiceError(RuntimeError):
    pass


class CompletionClient:
    """Narrow client for an external text-generation service: send the
    prompt text, receive completion text, with a timeout."""

    def __init__(self, endpoint: str, model: str = "", timeout: float = 30.0,
                 token: Optional[str] = None):
        self.endpoint = endpoint
        self.model = model
        self.timeout = timeout
        self.token = token if token is not None else os.environ.get(TOKEN_ENV_VAR)

    @property
    def configured(self) -> bool:
        return bool(self.endpoint and self.token)

    def complete(self, prompt_text: str) -> str:
        if not self.configured:
            raise ServiceError("service endpoint or credential not configured")
        headers = {"Authorization": f"Bearer {self.token}"}
        payload = {"model": self.model, "prompt": prompt_text}
        try:
            resp = requests.post(self.endpoint, json=payload, headers=headers,
                                 timeout=self.timeout)
            resp.raise_for_status()
            body = resp.json()
        except Exception as exc:
            raise ServiceError(f"completion request failed: {exc}") from exc
        text = body.get("text") if isinstance(body, dict) else None
        if not isinstance(text, str):
            raise ServiceError("service response missing 'text' field")
        return text


@dataclass(frozen=True)
class EnhancedReport:
    text: str
    enhanced: bool
    warnings: tuple[str, ...] = ()


def enhance_report(p: Prompt, client: Optional[CompletionClient]) -> EnhancedReport:
    """Ask the external service to rewrite the report. Never hard-fails: any
    problem returns the template report with a degradation notice."""
    if client is None or not client.configured:
        return EnhancedReport(
            text=p.report,
            enhanced=False,
            warnings=("text-generation service not configured; template report returned",))
    try:
        return EnhancedReport(text=client.complete(p.text), enhanced=True)
    except ServiceError as exc:
        return EnhancedReport(
            text=p.report,
            enhanced=False,
            warnings=(f"text-generation service failed ({exc}); template report returned",))
