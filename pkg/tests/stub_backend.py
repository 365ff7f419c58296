"""Minimal line-protocol backend used by the pipeline tests.

Modes (argv[1]):
  echo       qa returns the payload's gold field; mlm_choice picks the
             first option; contextualize upper-cases the prototype tail
  bad-id     responds with a wrong id once, then behaves like echo
  garbage    responds with non-JSON noise
  silent     never responds
  no-mark    contextualize answers without a question mark
"""

import json
import sys


def main():
    mode = sys.argv[1] if len(sys.argv) > 1 else "echo"
    misbehaved = False
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        request = json.loads(line)
        if mode == "silent":
            continue
        if mode == "garbage":
            print("this is not json")
            sys.stdout.flush()
            continue
        if mode == "bad-id" and not misbehaved:
            misbehaved = True
            print(json.dumps({"id": -999, "type": request["type"], "payload": {}}))
            sys.stdout.flush()
            continue
        kind = request["type"]
        payload = request.get("payload", {})
        if kind == "qa":
            body = {"answer": payload.get("gold")}
        elif kind == "mlm_choice":
            body = {"choice": payload["options"][0]}
        elif kind == "contextualize":
            prototype = payload["input"].rsplit("[SEP]", 1)[-1].strip()
            text = prototype[:-2].strip()
            question = text[0].upper() + text[1:]
            body = {"question": question if mode == "no-mark" else question + "?"}
        else:
            print(json.dumps({"id": request["id"], "error": f"unknown type {kind}"}))
            sys.stdout.flush()
            continue
        print(json.dumps({"id": request["id"], "type": kind, "payload": body}))
        sys.stdout.flush()


if __name__ == "__main__":
    main()
