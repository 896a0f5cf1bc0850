import sys


def main(argv=None):
    from kiselman.errors import KiselmanError
    from kiselman.pipe import KiselmanPipe
    from kiselman.utils.config import get_cli_args_parser, validate_run_config

    try:
        parser = get_cli_args_parser()
        args = validate_run_config(parser.parse_args(argv))
        code = KiselmanPipe(args).run()
    except KiselmanError as e:
        sys.stderr.write("%s\n" % (e))
        code = e.exit_code
    sys.exit(code)

if __name__ == "__main__":
    main()
