import io

from sturmrep.cli import run


def capture(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


def test_rep():
    code, out = capture(["rep", "DGG"])
    assert code == 0
    assert out == "[[1,2,0],[1,3,0],[1,2,1]]\n"


def test_compose():
    code, out = capture(["compose", "DGG"])
    assert code == 0
    assert out == "0->10,1->10101\n"


def test_apply():
    code, out = capture(["apply", "0->10,1->10101", "10"])
    assert code == 0
    assert out == "1010110\n"


def test_decompose_round_trip():
    import random

    rng = random.Random(6)
    words = ["G'D'GDD"] + [
        "".join(rng.choice(("G", "G'", "D", "D'")) for _ in range(rng.randint(0, 12)))
        for _ in range(20)
    ]
    for text in words:
        code, out = capture(["rep", text])
        assert code == 0
        code, word = capture(["decompose", "--matrix", out.strip()])
        assert code == 0
        code, out2 = capture(["rep", word.strip()])
        assert code == 0
        assert out2 == out


def test_decompose_rejects_with_diagnostic(capsys):
    code, _ = capture(["decompose", "--matrix", "[[1,1,0],[0,1,0],[0,2,1]]"])
    assert code == 1
    assert "membership failed: F<B+D" in capsys.readouterr().err


def test_membership_reports_both_ways():
    code, out = capture(["membership", "--matrix", "[[1,2,0],[1,3,0],[1,2,1]]"])
    assert code == 0 and out == "member: true\n"
    code, out = capture(["membership", "--matrix", "[[1,1,0],[0,1,0],[0,2,1]]"])
    assert code == 0 and out == "member: false (F<B+D)\n"


def test_parse_errors_exit_2(capsys):
    assert capture(["rep", "GXD"])[0] == 2
    assert capture(["decompose", "--matrix", "[[1,2],[3,4]]"])[0] == 2
    assert capture(["generate", "--slope", "nope", "--intercept", "0", "--length", "5"])[0] == 2
    assert capture(["apply", "0->10,1->1", "10x"])[0] == 2
    capsys.readouterr()


def test_domain_errors_exit_1(capsys):
    # rational slope
    code, _ = capture(
        ["generate", "--slope", "1/2", "--intercept", "0", "--length", "5"]
    )
    assert code == 1
    # non-primitive fixed point
    assert capture(["fixed-point", "GG"])[0] == 1
    assert capture(["sqrt-morphism", "G'D"])[0] == 1
    capsys.readouterr()


def test_unknown_subcommand_exits_2(capsys):
    assert capture(["frobnicate"])[0] == 2
    assert capture(["rep", "DGG", "--bogus"])[0] == 2
    capsys.readouterr()


def test_generate():
    code, out = capture(
        [
            "generate",
            "--slope",
            "(0+1*sqrt(3))/3",
            "--intercept",
            "(0+1*sqrt(3))/3",
            "--length",
            "5",
        ]
    )
    assert code == 0 and out == "10101\n"
    code, out = capture(
        ["generate", "--slope", "(3-1*sqrt(5))/2", "--intercept", "0",
         "--kind", "upper", "--length", "10"]
    )
    assert code == 0
    assert len(out.strip()) == 10


def test_fixed_point():
    code, out = capture(["fixed-point", "DGG", "--length", "20"])
    assert code == 0 and out == "10101101010110101011\n"
    code, out = capture(["fixed-point", "DGG", "--length", "5", "--show-params"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "eigenvalue: (2+1*sqrt(3))/1"
    assert lines[1].startswith("params: l0=(3-1*sqrt(3))/3 l1=(0+1*sqrt(3))/3")
    assert lines[2] == "10101"


def test_conjugates():
    code, out = capture(["conjugates", "--matrix", "[[1,1],[0,1]]"])
    assert code == 0
    assert out == "0->0,1->01\n0->0,1->10\n"


def test_sqrt_and_blocks():
    code, out = capture(["sqrt", "--genword", "DGG", "--length", "16"])
    assert code == 0 and out == "1010101101011010\n"
    code, out = capture(["sqrt", "--genword", "DGG", "--blocks", "4"])
    assert code == 0 and out == "10^2 1^2 01^2 0110101^2\n"


def test_sqrt_morphism():
    code, out = capture(["sqrt-morphism", "DGG"])
    assert code == 0
    assert out.splitlines()[:2] == [
        "psi: 0->1010101,1->1010101101011010101",
        "k: 2",
    ]


def test_verify_deterministic():
    args = ["verify", "--suite", "relations", "--seed", "7"]
    assert capture(args) == capture(args)
    code, out = capture(["verify", "--suite", "roundtrip", "--samples", "40", "--seed", "1"])
    assert code == 0
    assert "PASS roundtrip" in out
    assert capture(["verify", "--suite", "bogus"])[0] == 2


def test_verify_header_records_seed():
    _, out = capture(["verify", "--suite", "relations", "--seed", "99"])
    assert out.splitlines()[0].startswith("verify: seed=99")


def test_help_per_subcommand(capsys):
    assert capture(["--help"])[0] == 0
    for name in ("compose", "rep", "decompose", "membership", "fixed-point",
                 "generate", "conjugates", "sqrt", "sqrt-morphism", "verify", "apply"):
        assert capture([name, "--help"])[0] == 0
        capsys.readouterr()
