"""Pretrained-model handlers for model mode.

Wraps an extractive QA model, a masked LM for agreement choices, and a
sequence-to-sequence contextualizer. transformers/torch are imported
lazily so mock mode carries no model dependencies.
"""

from __future__ import annotations

DEFAULT_QA_MODEL = "distilbert-base-cased-distilled-squad"
DEFAULT_MLM_MODEL = "bert-base-uncased"
DEFAULT_CTX_MODEL = "facebook/bart-base"


class ModelHandlers:
    def __init__(self, config):
        try:
            import torch  # noqa: F401
            from transformers import (
                AutoModelForMaskedLM,
                AutoModelForQuestionAnswering,
                AutoModelForSeq2SeqLM,
                AutoTokenizer,
                pipeline,
            )
        except ImportError as exc:
            raise RuntimeError(
                "model mode needs the transformers and torch packages "
                "(pip install 'refbackend[model]')") from exc
        self._torch = __import__("torch")
        device = -1 if config.device in (None, "cpu") else config.device
        self._qa = pipeline("question-answering",
                            model=config.qa_model or DEFAULT_QA_MODEL,
                            device=device)
        mlm_name = config.mlm_model or DEFAULT_MLM_MODEL
        self._mlm_tokenizer = AutoTokenizer.from_pretrained(mlm_name)
        self._mlm = AutoModelForMaskedLM.from_pretrained(mlm_name)
        self._mlm.eval()
        ctx_name = config.ctx_model or DEFAULT_CTX_MODEL
        self._ctx_tokenizer = AutoTokenizer.from_pretrained(ctx_name)
        self._ctx = AutoModelForSeq2SeqLM.from_pretrained(ctx_name)
        self._ctx.eval()
        self._max_length = config.max_input_length

    def answer_qa(self, payload: dict) -> dict:
        result = self._qa(question=payload["question"],
                          context=payload["passage"],
                          max_seq_len=self._max_length)
        return {"answer": result.get("answer")}

    def choose_masked(self, payload: dict) -> dict:
        tokenizer, model, torch = self._mlm_tokenizer, self._mlm, self._torch
        text = payload["text"].replace("[MASK]", tokenizer.mask_token)
        options = list(payload["options"])
        encoded = tokenizer(text, return_tensors="pt",
                            truncation=True, max_length=self._max_length)
        mask_positions = (encoded.input_ids == tokenizer.mask_token_id).nonzero()
        if mask_positions.numel() == 0:
            raise ValueError("text carries no [MASK] sentinel")
        position = mask_positions[0, 1]
        with torch.no_grad():
            logits = model(**encoded).logits[0, position]
        scores = []
        for option in options:
            ids = tokenizer.convert_tokens_to_ids(tokenizer.tokenize(option))
            if not ids:
                scores.append(float("-inf"))
                continue
            scores.append(float(logits[ids[0]]))
        return {"choice": options[max(range(len(options)), key=scores.__getitem__)]}

    def contextualize(self, payload: dict) -> dict:
        tokenizer, model, torch = self._ctx_tokenizer, self._ctx, self._torch
        encoded = tokenizer(payload["input"], return_tensors="pt",
                            truncation=True, max_length=self._max_length)
        with torch.no_grad():
            generated = model.generate(**encoded, max_length=32, num_beams=4)
        question = tokenizer.decode(generated[0], skip_special_tokens=True).strip()
        if question and not question.endswith("?"):
            question += "?"
        return {"question": question}

    def handlers(self) -> dict:
        return {
            "qa": self.answer_qa,
            "mlm_choice": self.choose_masked,
            "contextualize": self.contextualize,
        }
