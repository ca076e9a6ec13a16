"""File-backed user accounts and in-memory bearer sessions."""

from __future__ import annotations

import hashlib
import hmac
import re
import secrets
import threading
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

PBKDF2_ITERATIONS = 50_000
_NAME_RE = re.compile(r"^[A-Za-z0-9_.-]{1,64}$")


class AccountError(ValueError):
    pass


class DuplicateAccountError(AccountError):
    pass


@dataclass(frozen=True)
class UserAccount:
    user_id: str
    display_name: str
    role: str  # "learner" | "admin"
    salt: bytes
    digest: bytes
    created_at: str

    @property
    def is_admin(self) -> bool:
        return self.role == "admin"


def _hash_password(password: str, salt: bytes) -> bytes:
    return hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt,
                               PBKDF2_ITERATIONS)


class AccountStore:
    """One account per line: id, name, role, salt, digest, created_at.

    The password digest never leaves this module; lookups are answered with
    the same "invalid credentials" outcome for unknown names and wrong
    passwords.
    """

    def __init__(self, path: str | Path, admin_users: tuple[str, ...] = ("admin",)):
        self.path = Path(path)
        self.admin_users = set(admin_users)
        self._lock = threading.Lock()
        self._accounts: dict[str, UserAccount] = {}
        if self.path.exists():
            for line in self.path.read_text(encoding="utf-8").splitlines():
                if line:
                    account = self._parse_line(line)
                    self._accounts[account.user_id] = account
        else:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.touch()

    @staticmethod
    def _parse_line(line: str) -> UserAccount:
        user_id, display, role, salt_hex, digest_hex, created = line.split("\t")
        return UserAccount(user_id, display, role,
                           bytes.fromhex(salt_hex), bytes.fromhex(digest_hex),
                           created)

    def register(self, name: str, password: str) -> UserAccount:
        if not _NAME_RE.match(name):
            raise AccountError(
                "user name must be 1-64 characters of letters, digits, '_', '.', '-'")
        if not password:
            raise AccountError("password must be non-empty")
        with self._lock:
            if name in self._accounts:
                raise DuplicateAccountError(f"user name {name!r} already registered")
            salt = secrets.token_bytes(16)
            account = UserAccount(
                user_id=name,
                display_name=name,
                role="admin" if name in self.admin_users else "learner",
                salt=salt,
                digest=_hash_password(password, salt),
                created_at=datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
            )
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write("\t".join([
                    account.user_id, account.display_name, account.role,
                    account.salt.hex(), account.digest.hex(), account.created_at,
                ]) + "\n")
            self._accounts[name] = account
            return account

    def verify(self, name: str, password: str) -> UserAccount | None:
        account = self._accounts.get(name)
        if account is None:
            # Burn the same hashing cost so unknown names are not cheaper.
            _hash_password(password, b"\x00" * 16)
            return None
        if hmac.compare_digest(_hash_password(password, account.salt), account.digest):
            return account
        return None

    def get(self, user_id: str) -> UserAccount | None:
        return self._accounts.get(user_id)


@dataclass(frozen=True)
class Session:
    token: str
    user_id: str
    role: str
    expires_at: float


class SessionStore:
    def __init__(self, ttl_seconds: float = 8 * 3600):
        self.ttl_seconds = ttl_seconds
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}

    def create(self, account: UserAccount) -> Session:
        token = secrets.token_urlsafe(32)  # 256 bits of entropy
        session = Session(token, account.user_id, account.role,
                          time.time() + self.ttl_seconds)
        with self._lock:
            self._sessions[token] = session
        return session

    def resolve(self, token: str) -> Session | None:
        with self._lock:
            session = self._sessions.get(token)
            if session is None:
                return None
            if session.expires_at <= time.time():
                del self._sessions[token]
                return None
            return session
