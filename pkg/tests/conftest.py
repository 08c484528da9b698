from hypothesis import settings

settings.register_profile("zscomb", deadline=None, max_examples=50)
settings.load_profile("zscomb")
