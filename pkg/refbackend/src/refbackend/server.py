"""Request loop for the line protocol.

One envelope per line in, one per line out, strictly in request order.
Bad lines and handler failures produce error envelopes and the loop keeps
going; the process exits when stdin closes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class BackendConfig:
    mode: str = "mock"                      # "mock" | "model"
    qa_model: Optional[str] = None
    mlm_model: Optional[str] = None
    ctx_model: Optional[str] = None
    max_input_length: int = 384
    device: Optional[str] = None

    def __post_init__(self):
        if self.mode not in ("mock", "model"):
            raise ValueError(f"unknown mode {self.mode!r}")


def _build_handlers(config: BackendConfig) -> dict:
    if config.mode == "mock":
        from .mock import HANDLERS
        return HANDLERS
    from .models import ModelHandlers
    return ModelHandlers(config).handlers()


def serve(config: BackendConfig, stdin=None, stdout=None) -> None:
    """Answer envelopes from ``stdin`` until it closes."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    handlers = _build_handlers(config)

    def reply(obj: dict) -> None:
        stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")
        stdout.flush()

    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            request = json.loads(line)
        except json.JSONDecodeError as exc:
            reply({"id": None, "error": f"malformed request line: {exc}"})
            continue
        request_id = request.get("id")
        kind = request.get("type")
        handler = handlers.get(kind)
        if handler is None:
            reply({"id": request_id, "error": f"unknown request type {kind!r}"})
            continue
        try:
            payload = handler(request.get("payload") or {})
        except Exception as exc:
            reply({"id": request_id, "error": f"{type(exc).__name__}: {exc}"})
            continue
        reply({"id": request_id, "type": kind, "payload": payload})


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="refbackend",
        description="Serve the roleq model protocol on stdin/stdout.")
    parser.add_argument("--mode", choices=("mock", "model"), default="mock")
    parser.add_argument("--qa-model", help="extractive QA model name (model mode)")
    parser.add_argument("--mlm-model", help="masked LM name (model mode)")
    parser.add_argument("--ctx-model", help="seq2seq contextualizer name (model mode)")
    parser.add_argument("--max-input-length", type=int, default=384)
    parser.add_argument("--device", help="cpu (default) or a cuda device id")
    args = parser.parse_args(argv)
    config = BackendConfig(mode=args.mode, qa_model=args.qa_model,
                           mlm_model=args.mlm_model, ctx_model=args.ctx_model,
                           max_input_length=args.max_input_length,
                           device=args.device)
    serve(config)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
