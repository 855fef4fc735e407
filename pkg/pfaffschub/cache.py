# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Content-addressed on-disk cache of reduced Gröbner bases
"""

import hashlib
import json
import logging
import os
import os.path
import tempfile
from datetime import datetime, timezone
from typing import Iterable, List, Optional

from pfaffschub.errors import PolynomialError, UsageError
from pfaffschub.groebner import DEFAULT_BUDGET, Budget, GroebnerBasis, buchberger, \
    is_groebner_basis
from pfaffschub.polyring import REVLEX, Polynomial, TermOrder

log = logging.getLogger(__name__)

SCHEMA = 1


def cache_key(generators: Iterable[Polynomial], order: TermOrder) -> str:
    "sha256 of the sorted generator texts and the order name"
    texts = sorted(g.to_text(order) for g in generators if g)
    digest = hashlib.sha256()
    digest.update(order.name.encode())
    for text in texts:
        digest.update(b"\n")
        digest.update(text.encode())
    return digest.hexdigest()


class GroebnerCache:
    """
    Stores one JSON file per (generator set, order). Paranoid mode re-checks
    every hit with the Buchberger criterion before trusting it.
    """

    def __init__(self, directory: str, paranoid: bool = True, enabled: bool = True,
                 version: str = ""):
        self.directory = directory
        self.paranoid = paranoid
        self.enabled = enabled
        self.version = version
        self.hits = 0
        self.misses = 0

    def path(self, key: str, order: TermOrder) -> str:
        "File holding the entry for a key"
        return os.path.join(self.directory, f"{order.name}-{key}.json")

    def load(self, generators: List[Polynomial], order: TermOrder = REVLEX,
             budget: Budget = DEFAULT_BUDGET) -> Optional[GroebnerBasis]:
        "Return the cached basis, or None on a miss"
        if not self.enabled:
            return None
        key = cache_key(generators, order)
        path = self.path(key, order)
        if not os.path.exists(path):
            self.misses += 1
            log.debug("Cache miss %s", key[:12])
            return None
        try:
            with open(path, encoding="utf-8") as stream:
                entry = json.load(stream)
            if entry.get("schema") != SCHEMA or entry.get("key") != key:
                raise ValueError("schema mismatch")
            basis = GroebnerBasis.from_json(entry["value"])
        except (OSError, ValueError, KeyError, TypeError, PolynomialError, UsageError) as err:
            log.warning("Discarding unreadable cache entry %s: %s", path, err)
            self.misses += 1
            return None
        if self.paranoid and not self._sane(generators, basis, budget):
            log.warning("Discarding cache entry %s: it is not a Gröbner basis of its input", path)
            self.misses += 1
            return None
        self.hits += 1
        log.debug("Cache hit %s", key[:12])
        return basis

    @staticmethod
    def _sane(generators: List[Polynomial], basis: GroebnerBasis, budget: Budget) -> bool:
        if not is_groebner_basis(list(basis), basis.order, budget):
            return False
        initial = basis.initial_ideal()
        return all(initial.contains(g.leading(basis.order)[0]) and basis.contains(g)
                   for g in generators if g)

    def store(self, generators: List[Polynomial], basis: GroebnerBasis):
        "Write an entry through a temporary file and an atomic rename"
        if not self.enabled:
            return
        key = cache_key(generators, basis.order)
        os.makedirs(self.directory, exist_ok=True)
        entry = {
            "schema": SCHEMA,
            "key": key,
            "version": self.version,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "value": basis.to_json(),
        }
        fd, tmp_path = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as stream:
                json.dump(entry, stream, indent=1, sort_keys=True)
            os.replace(tmp_path, self.path(key, basis.order))
        except OSError:
            if os.path.exists(tmp_path):
                os.unlink(tmp_path)
            raise

    def groebner(self, generators: Iterable[Polynomial], order: TermOrder = REVLEX,
                 budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
        "Cached Buchberger"
        gens = [g for g in generators if g]
        basis = self.load(gens, order, budget)
        if basis is None:
            basis = buchberger(gens, order, budget)
            try:
                self.store(gens, basis)
            except OSError as err:
                log.warning("Can't write cache entry into %s: %s", self.directory, err)
        return basis


def disabled_cache() -> GroebnerCache:
    "Cache object that never reads nor writes"
    return GroebnerCache("", enabled=False)
