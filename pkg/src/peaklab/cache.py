"""Advisory on-disk cache of counts, one JSON record per line.

Records are {"composition": "4,3,2", "count": "<decimal>", "version": tag}.
Counts travel as decimal strings so arbitrarily large values survive any
JSON reader.  Records from other engine versions, malformed lines, and
keys that do not parse to an admissible composition are skipped on load;
the cache is advisory, so a corrupt file merely means recomputation.
"""

import json
import os

from .compositions import Composition, is_admissible


class CountCache:
    def __init__(self, path, version):
        self.path = path
        self.version = version
        self._entries = {}
        self._load()

    def _load(self):
        if not self.path or not os.path.exists(self.path):
            return
        with open(self.path, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    key = record["composition"]
                    count = int(record["count"])
                    version = record["version"]
                    parsed = Composition.from_string(key)
                except (ValueError, KeyError, TypeError):
                    continue
                if version != self.version or not is_admissible(parsed):
                    continue
                self._entries[str(parsed)] = count

    def get(self, c):
        return self._entries.get(str(Composition(c)))

    def put(self, c, count):
        c = Composition(c)
        if not is_admissible(c):
            return
        key = str(c)
        if key in self._entries:
            return
        self._entries[key] = int(count)
        record = {"composition": key, "count": str(int(count)),
                  "version": self.version}
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(json.dumps(record) + "\n")
