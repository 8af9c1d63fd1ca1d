# -*- encoding: utf-8 -*-


def to_bitarray(data, width=6):
    """Convert integer to a list of booleans, most significant bit first"""
    return [True if digit == "1" else False for digit in bin(data)[2:].zfill(width)]


def from_bitarray(data):
    """Convert bit array back to integer"""
    if not data:
        return 0
    return int("".join(["1" if x else "0" for x in data]), 2)


def popcount(mask):
    return mask.bit_count()


def bits(mask):
    """Yield set bit indexes of mask in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask):
    return (mask & -mask).bit_length() - 1


def mask_of(vertices):
    """Combine vertex indexes to one bitmask"""
    output = 0
    for v in vertices:
        output |= 1 << v
    return output
