import hashlib


def derive_seed(master_seed: int, task: str) -> int:
    """
    Derive a per-task seed from the master seed.

    The task name is hashed together with the master seed, so adding a new task never shifts
    the randomness of an existing one.
    """
    digest = hashlib.sha256(f"{master_seed}:{task}".encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "big")
