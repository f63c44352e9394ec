"""Deep packet inspection toolkit.

Turns raw PCAP captures into labeled payload datasets and trains a
byte-level transformer classifier over transport-layer payloads.
"""

__version__ = "0.1.0"
