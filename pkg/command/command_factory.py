"""
command factory
"""
from bridge.context import ContextType


def create_command(command_type: ContextType):
    """
    create a command instance
    :param command_type: ContextType of the request
    :return: command instance
    """
    if command_type == ContextType.CHECK:
        from command.check_command import CheckCommand

        return CheckCommand()

    elif command_type == ContextType.CANON:
        from command.canon_command import CanonCommand

        return CanonCommand()

    elif command_type == ContextType.ROOTS:
        from command.roots_command import RootsCommand

        return RootsCommand()

    elif command_type == ContextType.GEN:
        from command.gen_command import GenCommand

        return GenCommand()

    elif command_type == ContextType.SEARCH:
        from command.search_command import SearchCommand

        return SearchCommand()

    elif command_type == ContextType.RENDER:
        from command.render_command import RenderCommand

        return RenderCommand()

    elif command_type == ContextType.LEMMAS:
        from command.lemmas_command import LemmasCommand

        return LemmasCommand()

    raise RuntimeError("unknown command type {}".format(command_type))
