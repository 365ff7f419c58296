"""Reference backend for the roleq line protocol.

Reads newline-delimited JSON envelopes ``{"id", "type", "payload"}`` on
stdin and answers each in order on stdout. ``mock`` mode is deterministic
and needs no model weights; ``model`` mode wraps pretrained extractive-QA,
masked-LM and sequence-to-sequence models.
"""

from .server import BackendConfig, serve

__version__ = "0.1.0"
__all__ = ["BackendConfig", "serve"]
