"""Smoke test for the pytdesign extension module."""

import pytdesign as td


def main():
    fixtures = td.load_fixtures()
    fano, t = fixtures["fano"]
    assert (fano.n, fano.k, fano.b, t) == (7, 3, 7, 2)
    for method in ("spectral", "bruteforce", "johnson", "relative"):
        assert fano.verify(2, method) == 1, method
        assert fixtures["fano-minus-one"][0].verify(2, method) is None, method

    assert fano.anf_degree_histogram() == {3: 7, 4: 28, 7: 1}
    assert sorted(term for term in fano.anf() if len(term) == 3) == sorted(fano.blocks)
    assert td.Design.parse(fano.render()).blocks == fano.blocks

    s5612 = td.generate_s5612()
    assert s5612.verify(5) == 1
    spectrum = s5612.spectrum()
    assert (6, 52, 132) in spectrum and (6, -12, 792) in spectrum
    length, dim, counts = s5612.code_weight_distribution()
    assert (length, dim) == (4095, 13)
    assert counts == {0: 1, 132: 1, 2036: 924, 2048: 6143, 2052: 990, 2100: 132, 2180: 1}

    assert td.krawtchouk(12, 6, 6) == -20
    assert td.steiner_values(12) == (52, -12)
    assert td.admissible(8, 150) == [
        8, 12, 20, 24, 32, 36, 44, 56, 60, 72, 80, 84, 92, 104, 116, 120, 132, 140, 144,
    ]
    assert td.walsh_spectrum(2, [[1, 2]]) == [1, -1, -1, 1]
    assert td.orthogonal_array_strength(3, [[], [1, 2], [1, 3], [2, 3]]) == 2

    try:
        td.Design.parse("7 3 1\n1 2\n")
    except ValueError as e:
        assert "line 2" in str(e)
    else:
        raise AssertionError("malformed design accepted")
    print("pytdesign smoke test passed")


if __name__ == "__main__":
    main()
