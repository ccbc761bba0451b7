namespace hilab {}
