from higher_bell.main import run


run()
